#include "finorb/lab.hpp"

#include <algorithm>
#include <set>

#include "finorb/bounds.hpp"
#include "finorb/errors.hpp"

namespace finorb {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

FiniteSystem random_system(std::uint64_t seed, std::uint32_t size,
                           std::uint32_t nmaps) {
  if (size < 1) throw input_error("system size must be >= 1");
  if (nmaps < 1) throw input_error("system needs at least one map");
  FiniteSystem sys;
  sys.size = size;
  sys.maps.assign(nmaps, std::vector<std::uint32_t>(size));
  std::uint64_t state = seed;
  for (auto& map : sys.maps) {
    for (auto& entry : map) {
      entry = static_cast<std::uint32_t>(splitmix64_next(state) % size);
    }
  }
  return sys;
}

namespace {

void validate(const FiniteSystem& sys, std::uint32_t x) {
  if (x >= sys.size) throw input_error("point index out of range");
  if (sys.maps.empty()) throw input_error("system needs at least one map");
  for (const auto& map : sys.maps) {
    if (map.size() != sys.size) throw input_error("map table size mismatch");
    for (auto v : map) {
      if (v >= sys.size) throw input_error("map entry out of range");
    }
  }
}

bool is_s_periodic(const FiniteSystem& sys,
                   const std::vector<std::uint32_t>& orbit) {
  std::vector<bool> in_orbit(sys.size, false);
  for (auto y : orbit) in_orbit[y] = true;
  for (const auto& map : sys.maps) {
    std::set<std::uint32_t> image;
    for (auto y : orbit) {
      if (!in_orbit[map[y]]) return false;  // cannot happen: orbit is closed
      image.insert(map[y]);
    }
    if (image.size() != orbit.size()) return false;
  }
  return true;
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& f,
                                   const std::vector<std::uint32_t>& g) {
  std::vector<std::uint32_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

std::vector<std::uint32_t> map_power(std::vector<std::uint32_t> base,
                                     std::uint64_t exponent) {
  std::vector<std::uint32_t> acc(base.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    acc[i] = static_cast<std::uint32_t>(i);
  }
  while (exponent > 0) {
    if (exponent & 1) acc = compose(base, acc);
    base = compose(base, base);
    exponent >>= 1;
  }
  return acc;
}

std::uint64_t factorial_u64(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Tarjan SCC on the orbit subgraph (edges y -> f(y)); returns component
// ids in reverse topological order (an edge's target has a lower or equal
// component id than its source... ids are assigned so that every edge goes
// from a higher id to a lower or equal id).
struct SccResult {
  std::vector<std::uint32_t> comp;  // orbit position -> component id
  std::uint32_t count = 0;
};

SccResult tarjan_scc(const std::vector<std::vector<std::uint32_t>>& succ) {
  const std::uint32_t n = static_cast<std::uint32_t>(succ.size());
  SccResult res;
  res.comp.assign(n, UINT32_MAX);
  std::vector<std::uint32_t> index(n, UINT32_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;

  // iterative DFS
  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != UINT32_MAX) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < succ[f.v].size()) {
        const std::uint32_t w = succ[f.v][f.edge++];
        if (index[w] == UINT32_MAX) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          for (;;) {
            const std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp[w] = res.count;
            if (w == f.v) break;
          }
          ++res.count;
        }
        const std::uint32_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }
  return res;
}

}  // namespace

std::vector<std::uint32_t> orbit_of(const FiniteSystem& sys, std::uint32_t x) {
  validate(sys, x);
  std::vector<bool> seen(sys.size, false);
  std::vector<std::uint32_t> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& map : sys.maps) {
      const std::uint32_t y = map[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

std::vector<PointFlags> classify(const FiniteSystem& sys) {
  validate(sys, 0);
  std::vector<PointFlags> flags(sys.size);
  for (std::uint32_t x = 0; x < sys.size; ++x) {
    flags[x].s_finite = true;
    flags[x].s_periodic = is_s_periodic(sys, orbit_of(sys, x));
  }
  return flags;
}

LevelData level_data(const FiniteSystem& sys, std::uint32_t x) {
  LevelData data;
  data.base = x;
  data.orbit = orbit_of(sys, x);
  const std::uint32_t n = static_cast<std::uint32_t>(data.orbit.size());

  std::vector<std::uint32_t> position(sys.size, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) position[data.orbit[i]] = i;

  // orbit-local successor lists (deduplicated)
  std::vector<std::vector<std::uint32_t>> succ(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::set<std::uint32_t> targets;
    for (const auto& map : sys.maps) {
      targets.insert(position[map[data.orbit[i]]]);
    }
    succ[i].assign(targets.begin(), targets.end());
  }

  const SccResult scc = tarjan_scc(succ);
  data.scc_of = scc.comp;
  data.scc_size.assign(scc.count, 0);
  for (std::uint32_t i = 0; i < n; ++i) ++data.scc_size[scc.comp[i]];

  // condensation edges; Tarjan ids are already a reverse topological
  // order, so increasing id = topological order for edge sources
  std::vector<std::set<std::uint32_t>> pred(scc.count);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto j : succ[i]) {
      if (scc.comp[i] != scc.comp[j]) pred[scc.comp[j]].insert(scc.comp[i]);
    }
  }

  // heaviest chain ending at each component, overall and from SCC(x)
  const std::uint32_t root = scc.comp[position[x]];
  std::vector<std::uint64_t> best_any(scc.count, 0);
  std::vector<std::uint64_t> best_from_root(scc.count, 0);
  for (std::uint32_t c = scc.count; c-- > 0;) {  // topological order
    std::uint64_t any = 0;
    std::uint64_t from_root = (c == root) ? data.scc_size[c] : 0;
    for (const auto q : pred[c]) {
      any = std::max(any, best_any[q]);
      if (best_from_root[q] > 0) {
        from_root = std::max(from_root, best_from_root[q] + data.scc_size[c]);
      }
    }
    best_any[c] = any + data.scc_size[c];
    best_from_root[c] = from_root;
  }

  data.B = 0;
  for (const auto b : best_any) data.B = std::max(data.B, b);

  data.lvl.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    data.lvl[i] = best_from_root[scc.comp[i]];
    data.levels[data.lvl[i]].push_back(data.orbit[i]);
  }
  return data;
}

std::uint64_t max_periodic_orbit_size(const FiniteSystem& sys) {
  validate(sys, 0);
  std::uint64_t best = 0;
  for (std::uint32_t x = 0; x < sys.size; ++x) {
    const auto orbit = orbit_of(sys, x);
    if (is_s_periodic(sys, orbit)) {
      best = std::max<std::uint64_t>(best, orbit.size());
    }
  }
  return best;
}

bool verify_check_periodic(const FiniteSystem& sys, std::uint32_t x,
                           std::uint64_t C, std::uint64_t guard) {
  validate(sys, x);
  if (C < 1) throw input_error("C must be >= 1");
  if (guard > 20) throw resource_error("guard above 20 overflows 64-bit C!");
  if (C > guard) throw resource_error("C exceeds the C! guard");

  const auto orbit = orbit_of(sys, x);
  const bool lhs = is_s_periodic(sys, orbit);

  const std::uint64_t exponent = factorial_u64(C);
  bool rhs = true;
  for (const auto& map : sys.maps) {
    const auto power = map_power(map, exponent);
    for (const auto y : orbit) {
      if (power[y] != y) {
        rhs = false;
        break;
      }
    }
    if (!rhs) break;
  }
  return lhs == rhs;
}

bool verify_level_monotone(const FiniteSystem& sys, std::uint32_t x) {
  const LevelData data = level_data(sys, x);
  std::vector<std::uint64_t> lvl_of(sys.size, 0);
  for (std::size_t i = 0; i < data.orbit.size(); ++i) {
    lvl_of[data.orbit[i]] = data.lvl[i];
  }
  for (const auto y : data.orbit) {
    for (const auto& map : sys.maps) {
      if (lvl_of[y] > lvl_of[map[y]]) return false;
    }
  }
  return true;
}

bool verify_level_lemmas(const FiniteSystem& sys, std::uint32_t x,
                         std::uint32_t size_guard) {
  const LevelData data = level_data(sys, x);
  const std::uint32_t n = static_cast<std::uint32_t>(data.orbit.size());
  if (size_guard > 20) throw resource_error("path enumeration guard above 20");
  if (n > size_guard) {
    throw resource_error("orbit too large for exhaustive path enumeration");
  }
  if (!verify_level_monotone(sys, x)) return false;

  std::vector<std::uint32_t> position(sys.size, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) position[data.orbit[i]] = i;

  // reachability within the orbit (reflexive-transitive: <S> is a monoid)
  std::vector<std::uint32_t> reach(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> stack{i};
    reach[i] |= 1u << i;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (const auto& map : sys.maps) {
        const std::uint32_t w = position[map[data.orbit[v]]];
        if (!(reach[i] & (1u << w))) {
          reach[i] |= 1u << w;
          stack.push_back(w);
        }
      }
    }
  }

  std::vector<std::uint32_t> comparable(n, 0), mutual(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const bool fwd = reach[i] & (1u << j);
      const bool bwd = reach[j] & (1u << i);
      if (fwd || bwd) comparable[i] |= 1u << j;
      if (fwd && bwd) mutual[i] |= 1u << j;
    }
  }

  const auto is_path = [&](std::uint32_t mask) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if ((mask & (1u << i)) && (mask & ~comparable[i])) return false;
    }
    return true;
  };

  // Lemma "equal-level slice": for every path P and y in P, the slice
  // {z in P : lvl(z) = lvl(y)} lies in P_{y,y}, i.e. inside mutual[y].
  // Lemma "closed under union": the union of all members of P_{y,y} is
  // again in P_{y,y}.
  std::map<std::uint64_t, std::uint32_t> level_to_mask;
  for (std::uint32_t i = 0; i < n; ++i) level_to_mask[data.lvl[i]] |= 1u << i;
  std::vector<std::uint32_t> lvl_mask_of(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    lvl_mask_of[i] = level_to_mask[data.lvl[i]];
  }

  std::vector<std::uint32_t> pyy_union(n, 0);
  const std::uint32_t full = (1u << n) - 1;  // n <= 20 by the guard
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!is_path(mask)) continue;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!(mask & (1u << y))) continue;
      const std::uint32_t slice = mask & lvl_mask_of[y];
      if (slice & ~mutual[y]) return false;  // slice escapes P_{y,y}
      if (!(mask & ~mutual[y])) pyy_union[y] |= mask;  // mask in P_{y,y}
    }
  }
  for (std::uint32_t y = 0; y < n; ++y) {
    const std::uint32_t u = pyy_union[y];
    if (u == 0) continue;
    if (!is_path(u)) return false;
    if (!(u & (1u << y))) return false;
    if (u & ~mutual[y]) return false;
  }
  return true;
}

bool verify_manymap_inequality(const FiniteSystem& sys, std::uint32_t x) {
  const LevelData data = level_data(sys, x);
  const Integer orbit_size(static_cast<unsigned long>(data.orbit.size()));
  const Integer B(static_cast<unsigned long>(data.B));
  const Integer s(static_cast<unsigned long>(sys.maps.size()));

  Integer rhs;
  mpz_pow_ui(rhs.get_mpz_t(), Integer(B * s + 1).get_mpz_t(),
             static_cast<unsigned long>(data.B - 1));
  if (orbit_size > rhs) return false;

  const auto level_one = data.levels.find(1);
  if (level_one != data.levels.end() && level_one->second.size() > 1) {
    return false;
  }
  std::uint64_t total = 0;
  for (const auto& [t, members] : data.levels) {
    if (t > data.B) return false;
    total += members.size();
  }
  return total == data.orbit.size();
}

}  // namespace finorb
