#include "finorb/polynomial.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>

#include "finorb/errors.hpp"

namespace finorb {

namespace {

// Keeps runaway products from eating the machine; the poly module is not
// meant for more than ~2^20 terms.
constexpr std::size_t kTermCap = std::size_t{1} << 20;

void check_term_cap(std::size_t n) {
  if (n > kTermCap) throw resource_error("polynomial term count exceeds 2^20");
}

void check_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) throw input_error("polynomial arity mismatch");
}

}  // namespace

Polynomial Polynomial::constant(std::uint32_t arity, Rational value) {
  Polynomial p(arity);
  p.add_term(Monomial(arity), value);
  return p;
}

Polynomial Polynomial::variable(std::uint32_t arity, std::uint32_t index) {
  if (index < 1 || index > arity) throw input_error("variable index out of range");
  Polynomial p(arity);
  Monomial m(arity);
  m.exponents[index - 1] = 1;
  p.add_term(m, 1);
  return p;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  check_term_cap(terms_.size());
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != arity_) throw input_error("evaluation point arity mismatch");
  Rational acc(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational term = coeff;
    for (std::uint32_t i = 0; i < arity_; ++i) {
      const auto e = mono.exponents[i];
      if (e == 0) continue;
      term *= rational_pow(point[i], e);
    }
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::partial_derivative(std::uint32_t var_index) const {
  if (var_index < 1 || var_index > arity_) {
    throw input_error("derivative variable index out of range");
  }
  Polynomial out(arity_);
  const std::size_t i = var_index - 1;
  for (const auto& [mono, coeff] : terms_) {
    const auto e = mono.exponents[i];
    if (e == 0) continue;
    Monomial m = mono;
    m.exponents[i] = e - 1;
    out.add_term(m, coeff * static_cast<unsigned long>(e));
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(arity_);
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_arity(*this, other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_arity(*this, other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_same_arity(*this, other);
  Polynomial out(arity_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(monomial_mul(ma, mb), ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= scalar;
  return *this;
}

Polynomial term_times(const Monomial& mono, const Rational& coeff,
                      const Polynomial& p) {
  Polynomial out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    out.add_term(monomial_mul(mono, m), coeff * c);
  }
  return out;
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw input_error("division by zero polynomial");
  check_same_arity(num, den);
  Polynomial quotient(num.arity());
  Polynomial rest = num;
  const Monomial& lm = den.leading_monomial();
  const Rational& lc = den.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& rm = rest.leading_monomial();
    if (!lm.divides(rm)) {
      throw std::logic_error("divide_exact: division is not exact");
    }
    const Monomial q = monomial_quotient(rm, lm);
    const Rational c = rest.leading_coefficient() / lc;
    quotient.add_term(q, c);
    rest -= term_times(q, c, den);
  }
  return quotient;
}

Integer denominator_lcm(const Polynomial& p) {
  Integer l(1);
  for (const auto& [mono, coeff] : p.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coeff.get_den_mpz_t());
  }
  return l;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
  Parser(std::string_view text, std::uint32_t arity)
      : text_(text), arity_(arity) {}

  Polynomial run() {
    Polynomial poly(arity_);
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    parse_term(poly, sign);
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        parse_term(poly, c == '-' ? -1 : 1);
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected input", pos_);
    return poly;
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Integer parse_digits(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw parse_error(std::string("expected ") + what, pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t parse_small_posint(const char* what) {
    const std::size_t at = pos_;
    const Integer v = parse_digits(what);
    if (v < 1 || v > 0x7fffffff) {
      throw parse_error(std::string(what) + " out of range", at);
    }
    return static_cast<std::uint32_t>(v.get_ui());
  }

  // var ['^' posint] ('*' var ['^' posint])*
  Monomial parse_mono() {
    Monomial mono(arity_);
    for (;;) {
      skip_ws();
      if (peek() != 'x') throw parse_error("expected variable", pos_);
      ++pos_;
      const std::size_t at = pos_;
      const Integer idx = parse_digits("variable index");
      if (idx < 1 || idx > arity_) {
        throw parse_error("variable index out of range", at);
      }
      const std::size_t var = static_cast<std::size_t>(idx.get_ui()) - 1;
      std::uint32_t exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        exp = parse_small_posint("exponent");
      }
      const std::uint64_t total =
          static_cast<std::uint64_t>(mono.exponents[var]) + exp;
      if (total > 0x7fffffff) {
        throw parse_error("exponent out of range", at);
      }
      mono.exponents[var] = static_cast<std::uint32_t>(total);
      skip_ws();
      if (peek() == '*') {
        const std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (peek() == 'x') continue;
        pos_ = save;  // not ours: the '*' belongs to an outer production
      }
      return mono;
    }
  }

  void parse_term(Polynomial& poly, int sign) {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_digits("coefficient");
      Integer den(1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = parse_digits("denominator");
        if (den == 0) throw parse_error("zero denominator literal", at);
      }
      Rational coeff = make_rational(sign < 0 ? -num : num, den);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        poly.add_term(parse_mono(), coeff);
      } else {
        poly.add_term(Monomial(arity_), coeff);
      }
    } else if (c == 'x') {
      poly.add_term(parse_mono(), Rational(sign));
    } else {
      throw parse_error("expected term", pos_);
    }
  }

  std::string_view text_;
  std::uint32_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::uint32_t arity) {
  return Parser(text, arity).run();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? '-' : '+';
    }
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (mono.is_unit()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
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

}  // namespace finorb
