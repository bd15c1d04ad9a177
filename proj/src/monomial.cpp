#include "finorb/monomial.hpp"

#include <algorithm>

#include "finorb/errors.hpp"

namespace finorb {

namespace {
constexpr std::uint64_t kExponentCap = 0x7fffffffull;  // 2^31 - 1
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  const std::uint64_t da = a.total_degree();
  const std::uint64_t db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // equal degree: the rightmost nonzero difference decides, reversed
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) {
      return a.exponents[i] < b.exponents[i] ? 1 : -1;
    }
  }
  return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    const std::uint64_t e =
        static_cast<std::uint64_t>(a.exponents[i]) + b.exponents[i];
    if (e > kExponentCap) throw resource_error("monomial exponent overflow");
    out.exponents[i] = static_cast<std::uint32_t>(e);
  }
  return out;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    out.exponents[i] = a.exponents[i] - b.exponents[i];
  }
  return out;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    out.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  }
  return out;
}

}  // namespace finorb
