#ifndef FINORB_GROEBNER_HPP
#define FINORB_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "finorb/polymap.hpp"
#include "finorb/polynomial.hpp"

namespace finorb {

// Reduced Gröbner basis under grevlex, with each basis element carrying the
// cofactor vector that expresses it in terms of the input generators. The
// representation b_i = sum_j cofactors[i][j] * generators[j] is re-verified
// by exact arithmetic on every construction.
struct TrackedBasis {
  std::vector<Polynomial> generators;
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;

  bool is_unit_ideal() const;
};

TrackedBasis groebner_basis(const std::vector<Polynomial>& generators);

// Witness that J and the fixed-locus polynomials g_i = f_i - x_i have no
// common zero over the algebraic closure:
//   h[0]*J + h[1]*g_1 + ... + h[n]*g_n = k,  k != 0,
// with N clearing all denominators, Nk = N*k a nonzero integer.
struct Certificate {
  std::vector<Polynomial> h;
  Rational k;
  Integer N;
  Integer Nk;
};

// Throws common_zero_exists when the basis of {J, g_1..g_n} is not {1},
// i.e. the Jacobian vanishes at some fixed point over the closure.
Certificate unit_ideal_certificate(const PolyMap& map);

bool verify_certificate(const Certificate& cert, const PolyMap& map);

// Smallest prime p >= start with p not dividing Nk and not dividing the
// map denominator. Pre: the certificate verifies against the map.
std::uint64_t select_prime(const Certificate& cert, const PolyMap& map,
                           std::uint64_t start);

}  // namespace finorb

#endif
