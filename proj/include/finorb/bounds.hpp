#ifndef FINORB_BOUNDS_HPP
#define FINORB_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finorb/rational.hpp"

namespace finorb {

// Explicit orbit-size bound formulas, all exact big-integer arithmetic.

// Maximum cycle length for polynomial self-maps of Z^n: the optimal values
// 24 (n=2) and 112 (n=3), and 2*(4^n - 2^n) in general.
Integer pezda_cycle_bound(std::uint32_t n);

// point_count + cycle_bound; callers treat it as a strict upper bound on
// the orbit size of a preperiodic point.
Integer single_map_bound(const Integer& point_count,
                         const Integer& cycle_bound);

// point_count * ((q^d - 1) * p^vp + 1), strict upper bound over a DVR with
// residue field of size q = p^r. Pre: q a power of p.
Integer dvr_bound(const Integer& point_count, const Integer& q,
                  std::uint32_t d, const Integer& p, std::uint32_t vp);

// (C * point_count * s + 1)^(C * point_count - 1).
Integer multi_map_bound(const Integer& C, const Integer& point_count,
                        const Integer& s);

// multi_map_bound with point_count = p^n.
Integer corollary3_bound(const Integer& C, const Integer& p, std::uint32_t n,
                         const Integer& s);

// p^n, the orbit bound for eventually fixed integer points once a
// certificate prime p has been selected.
Integer eventually_fixed_bound(const Integer& p, std::uint32_t n);

// A recomputable record of one bound evaluation.
struct BoundReport {
  std::string kind;
  std::vector<std::pair<std::string, Integer>> inputs;
  Integer value;
};

BoundReport pezda_report(std::uint32_t n);
BoundReport single_map_report(const Integer& point_count,
                              const Integer& cycle_bound);
BoundReport dvr_report(const Integer& point_count, const Integer& q,
                       std::uint32_t d, const Integer& p, std::uint32_t vp);
BoundReport multi_map_report(const Integer& C, const Integer& point_count,
                             const Integer& s);
BoundReport corollary3_report(const Integer& C, const Integer& p,
                              std::uint32_t n, const Integer& s);
BoundReport eventually_fixed_report(const Integer& p, std::uint32_t n);

}  // namespace finorb

#endif
