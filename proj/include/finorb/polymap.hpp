#ifndef FINORB_POLYMAP_HPP
#define FINORB_POLYMAP_HPP

#include <cstdint>
#include <vector>

#include "finorb/polynomial.hpp"

namespace finorb {

// Polynomial self-map of affine n-space over Z[1/N]: n component
// polynomials whose coefficient denominators divide a power of N.
class PolyMap {
public:
  PolyMap(Integer denominator, std::vector<Polynomial> components);

  std::uint32_t arity() const { return arity_; }
  const Integer& denominator() const { return denominator_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::uint32_t i) const { return components_[i]; }

  bool operator==(const PolyMap& other) const = default;

private:
  std::uint32_t arity_;
  Integer denominator_;
  std::vector<Polynomial> components_;
};

// det of the matrix of partials d(f_i)/d(x_j), computed exactly:
// fraction-free Bareiss elimination for n <= 4, cofactor expansion above.
Polynomial jacobian_determinant(const PolyMap& map);

// Fixed-locus components g_i = f_i - x_i.
std::vector<Polynomial> fixed_locus_polynomials(const PolyMap& map);

// Syntactic unramifiedness test: true iff every component can be written
// x_i + p*g_i + h_i(x_1^p..x_n^p) for some g_i, h_i over Z[1/N], i.e.
// after removing x_i every term has numerator divisible by p or all
// exponents divisible by p. Such maps have Jacobian matrix congruent to
// the identity mod p, hence nowhere-vanishing Jacobian determinant on
// F_p^n. Pre: p prime, p does not divide N.
bool is_unramified_shape(const PolyMap& map, std::uint64_t p);

}  // namespace finorb

#endif
