#ifndef FINORB_LAB_HPP
#define FINORB_LAB_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace finorb {

// Abstract finite dynamical system: points 0..size-1 and total self-maps
// given as index tables.
struct FiniteSystem {
  std::uint32_t size = 0;
  std::vector<std::vector<std::uint32_t>> maps;
};

std::uint64_t splitmix64_next(std::uint64_t& state);

// Deterministic system for a given seed; entries are drawn map by map,
// point by point, from a splitmix64 stream seeded with `seed`.
FiniteSystem random_system(std::uint64_t seed, std::uint32_t size,
                           std::uint32_t nmaps);

struct PointFlags {
  bool s_finite = true;  // carrier is finite
  bool s_periodic = false;
};

// s_periodic = every map restricts to a permutation of the point's orbit.
std::vector<PointFlags> classify(const FiniteSystem& sys);

// Orbit of a point (insertion order: breadth-first closure).
std::vector<std::uint32_t> orbit_of(const FiniteSystem& sys, std::uint32_t x);

// Level decomposition of the orbit of x. A path is a subset of the orbit
// in which any two points are comparable under reachability; since points
// of one strongly connected component are mutually reachable, the heaviest
// path between two points is the heaviest chain of SCCs joining them in
// the condensation (weights = component sizes).
struct LevelData {
  std::uint32_t base = 0;
  std::vector<std::uint32_t> orbit;     // point ids, closure order
  std::vector<std::uint32_t> scc_of;    // orbit position -> scc id
  std::vector<std::uint64_t> scc_size;  // scc id -> weight
  std::uint64_t B = 0;                  // heaviest chain in the condensation
  std::vector<std::uint64_t> lvl;       // orbit position -> level
  std::map<std::uint64_t, std::vector<std::uint32_t>> levels;  // L(t), ids
};

LevelData level_data(const FiniteSystem& sys, std::uint32_t x);

// Largest orbit size over the S-periodic points of the system (0 if none);
// the tight constant for the C! periodicity criterion.
std::uint64_t max_periodic_orbit_size(const FiniteSystem& sys);

// Checks the equivalence "x is S-periodic <=> f^(C!)(y) = y for all f in S
// and all y in the orbit of x", both directions evaluated literally.
// Pre: C at least the maximum S-periodic orbit size. Throws resource_error
// when C exceeds the guard (C! must also fit in 64 bits, so guard <= 20).
bool verify_check_periodic(const FiniteSystem& sys, std::uint32_t x,
                           std::uint64_t C, std::uint64_t guard = 8);

// Level monotonicity along every single-map step inside the orbit.
bool verify_level_monotone(const FiniteSystem& sys, std::uint32_t x);

// Exhaustive path-family checks on the orbit of x: monotonicity, the
// equal-level slice of every path through y lies in P_{y,y}, and P_{y,y}
// is closed under union. Throws resource_error when the orbit exceeds
// size_guard (path enumeration is exponential).
bool verify_level_lemmas(const FiniteSystem& sys, std::uint32_t x,
                         std::uint32_t size_guard = 20);

// |O_S(x)| <= (B*|S|+1)^(B-1), plus |L(1)| <= 1 and sum_t |L(t)| = |O_S(x)|.
bool verify_manymap_inequality(const FiniteSystem& sys, std::uint32_t x);

}  // namespace finorb

#endif
