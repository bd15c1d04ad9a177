#ifndef FINORB_MODP_POLY_HPP
#define FINORB_MODP_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "finorb/monomial.hpp"
#include "finorb/polynomial.hpp"

namespace finorb {

// Base change of a rational polynomial to F_p: coefficients are canonical
// residues in [1, p-1], terms that reduce to zero are dropped.
class PolynomialModP {
public:
  using TermMap = std::map<Monomial, std::uint64_t, GrevlexGreater>;

  PolynomialModP(std::uint64_t p, std::uint32_t arity) : p_(p), arity_(arity) {}

  std::uint64_t prime() const { return p_; }
  std::uint32_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& mono, std::uint64_t residue);

  std::uint64_t evaluate(const std::vector<std::uint64_t>& point) const;

  std::string to_string() const;

  bool operator==(const PolynomialModP& other) const = default;

private:
  std::uint64_t p_;
  std::uint32_t arity_;
  TermMap terms_;
};

// Coefficient-wise reduction; denominators are inverted mod p. Throws
// prime_divides_denominator when p divides some coefficient denominator.
PolynomialModP reduce_mod_prime(const Polynomial& poly, std::uint64_t p);

}  // namespace finorb

#endif
