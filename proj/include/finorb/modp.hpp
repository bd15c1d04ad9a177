#ifndef FINORB_MODP_HPP
#define FINORB_MODP_HPP

#include <cstdint>
#include <vector>

#include "finorb/modp_poly.hpp"
#include "finorb/polymap.hpp"

namespace finorb {

// Points of F_p^n are indexed by base-p digits, little-endian in x1:
// index = x1 + x2*p + ... + xn*p^(n-1).
std::vector<std::uint64_t> index_to_point(std::uint64_t index, std::uint64_t p,
                                          std::uint32_t arity);
std::uint64_t point_to_index(const std::vector<std::uint64_t>& point,
                             std::uint64_t p);

// Number of points p^n, guarded by the enumeration budget. Throws
// budget_exceeded when p^n > budget.
std::uint64_t checked_point_count(std::uint64_t p, std::uint32_t arity,
                                  std::uint64_t budget);

// Exhaustive evaluation table of a reduced map on F_p^n.
struct FiniteMap {
  std::uint64_t p = 0;
  std::uint32_t arity = 0;
  std::vector<std::uint32_t> table;  // table[i] = index of image of point i

  std::uint64_t point_count() const { return table.size(); }
};

FiniteMap build_finite_map(const PolyMap& map, std::uint64_t p,
                           std::uint64_t budget, unsigned threads = 1);

// Point indices with fm(x) = x, ascending.
std::vector<std::uint64_t> fixed_points(const FiniteMap& fm);

// Exactly the points lying on cycles of the functional graph, found by
// peeling in-degree-zero nodes until stable. Ascending indices.
std::vector<std::uint64_t> periodic_points(const FiniteMap& fm);

enum class WitnessMode { FixedPointsOnly, AllPeriodicPoints };

struct UnramifiedReport {
  std::uint64_t p = 0;
  WitnessMode mode = WitnessMode::FixedPointsOnly;
  bool ok = false;
  struct Witness {
    std::vector<std::uint64_t> point;
    std::uint64_t jacobian;  // value of J mod p at the point
  };
  std::vector<Witness> witnesses;
  std::uint64_t checked_count = 0;
};

// Evaluates the Jacobian determinant mod p at every fixed (or periodic)
// point; ok iff all values are nonzero.
UnramifiedReport unramified_report(const PolyMap& map, std::uint64_t p,
                                   WitnessMode mode, std::uint64_t budget,
                                   unsigned threads = 1);

// Number of common zeros in F_p^n; p^n for an empty equation list.
std::uint64_t count_affine_points(const std::vector<Polynomial>& equations,
                                  std::uint32_t arity, std::uint64_t p,
                                  std::uint64_t budget, unsigned threads = 1);

// Exact integer determinant (fraction-free elimination).
Integer integer_determinant(std::vector<std::vector<Integer>> m);

// det(A) mod p != 0 — the unramifiedness criterion for the monomial map
// attached to an integer matrix A.
bool monomial_unramified(const std::vector<std::vector<Integer>>& A,
                         std::uint64_t p);

}  // namespace finorb

#endif
