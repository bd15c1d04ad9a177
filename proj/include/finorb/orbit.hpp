#ifndef FINORB_ORBIT_HPP
#define FINORB_ORBIT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "finorb/modp.hpp"
#include "finorb/polymap.hpp"

namespace finorb {

using RationalPoint = std::vector<Rational>;

RationalPoint apply_map(const PolyMap& map, const RationalPoint& point);

enum class OrbitStatus { Closed, ExceededBudget };

struct OrbitReport {
  OrbitStatus status = OrbitStatus::ExceededBudget;
  // Distinct points in visiting order; for a closed single-map orbit the
  // size is tail + period.
  std::vector<RationalPoint> elements;
  // Present iff status == Closed and the orbit came from a single map:
  // minimal n >= 0 and m > 0 with f^n(x) = f^(n+m)(x).
  std::uint64_t tail = 0;
  std::uint64_t period = 0;
  bool has_cycle_data = false;
};

// Iterates until the first repeat (Closed, minimal tail/period by first
// repeat position) or until more than budget distinct points are seen.
// Throws resource_error when a coordinate outgrows bit_guard bits.
OrbitReport orbit_single(const PolyMap& map, const RationalPoint& start,
                         std::uint64_t budget,
                         std::uint64_t bit_guard = 1000000);

// Breadth-first closure of {start} under all maps.
OrbitReport orbit_multi(const std::vector<PolyMap>& maps,
                        const RationalPoint& start, std::uint64_t budget,
                        std::uint64_t bit_guard = 1000000);

enum class Verdict { Preperiodic, NotPreperiodic };

struct Decision {
  Verdict verdict = Verdict::NotPreperiodic;
  Integer bound_used;
  std::uint64_t prime = 0;
  std::optional<UnramifiedReport> certification;
  std::optional<OrbitReport> orbit;  // present iff Preperiodic
};

struct DecideOptions {
  std::uint64_t point_budget = 10000000;  // exhaustive F_p^n enumeration
  std::uint64_t orbit_budget = 1000000;   // distinct points per orbit
  std::uint64_t bit_guard = 1000000;      // bits per coordinate
  std::uint64_t prime_cap = 200;          // prime search ceiling
  unsigned threads = 1;
};

// Certifies a prime (the given one, or the smallest admissible one not
// dividing N), then bounds the orbit by p^n + pezda_cycle_bound(n) and
// iterates. Throws no_admissible_prime / budget_exceeded.
Decision decide_single(const PolyMap& map, const RationalPoint& start,
                       std::optional<std::uint64_t> prime,
                       const DecideOptions& options = {});

// Map-system decision: requires the reduced Jacobian determinant of every
// map to be nowhere zero on F_p^n (throws map_not_certified otherwise),
// bounds the orbit by (C*p^n*|S|+1)^(C*p^n-1) and runs the closure.
Decision decide_multi(const std::vector<PolyMap>& maps,
                      const RationalPoint& start, const Integer& C,
                      std::uint64_t prime, const DecideOptions& options = {});

// True iff the mod-p reductions of the tail points f^0(x)..f^(tail-1)(x)
// are pairwise distinct. Pre: the orbit closes and p certifies the map
// (unramified at all periodic residue points).
bool tail_injectivity_check(const PolyMap& map, const RationalPoint& start,
                            std::uint64_t prime,
                            const DecideOptions& options = {});

}  // namespace finorb

#endif
