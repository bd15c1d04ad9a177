#include "finorb/modp_poly.hpp"

#include "finorb/errors.hpp"

namespace finorb {

void PolynomialModP::add_term(const Monomial& mono, std::uint64_t residue) {
  residue %= p_;
  if (residue == 0) return;
  auto [it, inserted] = terms_.emplace(mono, residue);
  if (!inserted) {
    it->second = (it->second + residue) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t PolynomialModP::evaluate(
    const std::vector<std::uint64_t>& point) const {
  std::uint64_t acc = 0;
  for (const auto& [mono, coeff] : terms_) {
    std::uint64_t term = coeff;
    for (std::uint32_t i = 0; i < arity_; ++i) {
      const auto e = mono.exponents[i];
      if (e == 0) continue;
      term = mulmod_u64(term, powmod_u64(point[i] % p_, e, p_), p_);
    }
    acc = (acc + term) % p_;
  }
  return acc;
}

std::string PolynomialModP::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first) out += '+';
    first = false;
    if (mono.is_unit()) {
      out += std::to_string(coeff);
      continue;
    }
    if (coeff != 1) {
      out += std::to_string(coeff);
      out += '*';
    }
    bool first_var = true;
    for (std::uint32_t i = 0; i < arity_; ++i) {
      const auto e = mono.exponents[i];
      if (e == 0) continue;
      if (!first_var) out += '*';
      first_var = false;
      out += 'x';
      out += std::to_string(i + 1);
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

PolynomialModP reduce_mod_prime(const Polynomial& poly, std::uint64_t p) {
  if (p < 2) throw input_error("modulus must be a prime >= 2");
  PolynomialModP out(p, poly.arity());
  for (const auto& [mono, coeff] : poly.terms()) {
    out.add_term(mono, rational_mod_p(coeff, p));
  }
  return out;
}

}  // namespace finorb
