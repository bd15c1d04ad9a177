#ifndef FINORB_POLYNOMIAL_HPP
#define FINORB_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "finorb/monomial.hpp"
#include "finorb/rational.hpp"

namespace finorb {

// Sparse multivariate polynomial over Q. Terms are held in descending
// grevlex order and never carry a zero coefficient, so equality is
// structural and serialization is canonical. Immutable in spirit: all
// operations return fresh values.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(std::uint32_t arity) : arity_(arity) {}

  static Polynomial constant(std::uint32_t arity, Rational value);
  // 1-based variable index.
  static Polynomial variable(std::uint32_t arity, std::uint32_t index);

  // Grammar (whitespace-insensitive):
  //   poly  := ['-'] term (('+'|'-') term)*
  //   term  := coeff ['*' mono] | mono
  //   coeff := int ['/' posint]
  //   mono  := var ['^' posint] ('*' var ['^' posint])*
  //   var   := 'x' posint
  // Throws parse_error with the offending position.
  static Polynomial parse(std::string_view text, std::uint32_t arity);

  std::uint32_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  // True iff the polynomial is a constant (possibly zero).
  bool is_constant() const;
  // Value of a constant polynomial (0 when zero). Pre: is_constant().
  Rational constant_value() const;

  // Leading term under grevlex. Pre: !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  // Accumulates coeff * mono, dropping the term if it cancels to zero.
  void add_term(const Monomial& mono, const Rational& coeff);

  Rational evaluate(const std::vector<Rational>& point) const;
  Polynomial partial_derivative(std::uint32_t var_index) const;

  // Canonical form: grevlex-descending terms, coefficient first,
  // exponent 1 omitted, no whitespace. parse(to_string()) == *this.
  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }

  bool operator==(const Polynomial& other) const = default;

private:
  std::uint32_t arity_;
  TermMap terms_;
};

// Single-term product helper used by division loops.
Polynomial term_times(const Monomial& mono, const Rational& coeff,
                      const Polynomial& p);

// Exact quotient num/den in Q[x_1..x_n]. Pre: den != 0 and den | num
// (used by fraction-free elimination, where exactness is guaranteed).
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

// Least common multiple of all coefficient denominators (1 for zero).
Integer denominator_lcm(const Polynomial& p);

}  // namespace finorb

#endif
