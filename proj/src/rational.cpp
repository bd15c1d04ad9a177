#include "finorb/rational.hpp"

#include <cstddef>

#include "finorb/errors.hpp"

namespace finorb {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw input_error("zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return make_rational(Integer(text), 1);
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator literal: " + text);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational literal: " + text);
  }
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

Rational rational_pow(const Rational& base, std::uint64_t exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return out;  // base canonical => powers canonical
}

std::uint64_t mod_p(const Integer& value, std::uint64_t p) {
  Integer r;
  Integer m(static_cast<unsigned long>(p));
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p) {
  // extended Euclid over signed 128-bit intermediates
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a % p);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw input_error("inverse_mod_p: argument not invertible");
  if (t < 0) t += static_cast<__int128>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t rational_mod_p(const Rational& value, std::uint64_t p) {
  const std::uint64_t den = mod_p(value.get_den(), p);
  if (den == 0) {
    throw prime_divides_denominator("prime " + std::to_string(p) +
                                    " divides a coefficient denominator");
  }
  const std::uint64_t num = mod_p(value.get_num(), p);
  return mulmod_u64(num, inverse_mod_p(den, p), p);
}

bool divides_power_of(const Integer& den, const Integer& N) {
  Integer d = den;
  if (d < 0) d = -d;
  if (d == 0) return false;
  while (d != 1) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), N.get_mpz_t());
    if (g == 1) return false;
    while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t())) {
      mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    }
  }
  return true;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
  if (n < 2) n = 2;
  while (!is_prime_u64(n)) ++n;
  return n;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, p);
    base = mulmod_u64(base, base, p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace finorb
