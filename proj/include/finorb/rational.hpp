#ifndef FINORB_RATIONAL_HPP
#define FINORB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace finorb {

// Exact arithmetic carriers. mpq_class keeps fractions reduced with a
// positive denominator once canonicalized, which is exactly the Rational
// contract (zero is 0/1, gcd(|num|, den) = 1).
using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws input_error when den = 0.
Rational make_rational(Integer num, Integer den);

// Parses "3", "-3", "1/2", "-1/2". Throws input_error on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text: "n" when the denominator is 1, else "n/d".
std::string rational_to_string(const Rational& value);

Rational rational_pow(const Rational& base, std::uint64_t exponent);

// Canonical residue of v in [0, p).
std::uint64_t mod_p(const Integer& value, std::uint64_t p);

// Inverse mod a prime p; pre: a not divisible by p.
std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p);

// Reduces num/den mod p, inverting the denominator. Throws
// prime_divides_denominator when p | den.
std::uint64_t rational_mod_p(const Rational& value, std::uint64_t p);

// True iff den | N^k for some k >= 0 (all prime factors of den divide N).
bool divides_power_of(const Integer& den, const Integer& N);

bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_at_least(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

}  // namespace finorb

#endif
