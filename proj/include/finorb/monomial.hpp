#ifndef FINORB_MONOMIAL_HPP
#define FINORB_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace finorb {

// Exponent vector of fixed length (the ambient arity). Exponents are capped
// at 2^31-1; products past the cap raise resource_error instead of wrapping.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::uint32_t arity) : exponents(arity, 0) {}

  std::uint32_t arity() const { return static_cast<std::uint32_t>(exponents.size()); }
  std::uint64_t total_degree() const;
  bool is_unit() const { return total_degree() == 0; }

  bool divides(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
};

// -1, 0, +1 under graded reverse lexicographic order. Pre: equal arity.
int grevlex_cmp(const Monomial& a, const Monomial& b);

// Descending grevlex, so ordered maps iterate leading term first.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);
// Pre: b divides a.
Monomial monomial_quotient(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

}  // namespace finorb

#endif
