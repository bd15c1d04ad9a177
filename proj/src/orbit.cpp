#include "finorb/orbit.hpp"

#include <deque>
#include <map>
#include <set>
#include <utility>

#include "finorb/bounds.hpp"
#include "finorb/errors.hpp"

namespace finorb {

namespace {

void check_bit_guard(const RationalPoint& point, std::uint64_t bit_guard) {
  for (const auto& c : point) {
    if (mpz_sizeinbase(c.get_num_mpz_t(), 2) > bit_guard ||
        mpz_sizeinbase(c.get_den_mpz_t(), 2) > bit_guard) {
      throw resource_error("orbit coordinate exceeds the bit-length guard");
    }
  }
}

void check_arity(const PolyMap& map, const RationalPoint& point) {
  if (point.size() != map.arity()) {
    throw input_error("point arity does not match map arity");
  }
}

Integer pow_int(std::uint64_t base, std::uint32_t exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

std::uint64_t bound_to_budget(const Integer& bound,
                              std::uint64_t orbit_budget) {
  if (!bound.fits_ulong_p() || bound.get_ui() > orbit_budget) {
    throw resource_error(
        "orbit bound exceeds the iteration budget; no verdict");
  }
  return bound.get_ui();
}

std::vector<std::uint64_t> reduce_point(const RationalPoint& point,
                                        std::uint64_t p) {
  std::vector<std::uint64_t> out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    out[i] = rational_mod_p(point[i], p);
  }
  return out;
}

}  // namespace

RationalPoint apply_map(const PolyMap& map, const RationalPoint& point) {
  check_arity(map, point);
  RationalPoint image;
  image.reserve(map.arity());
  for (const auto& component : map.components()) {
    image.push_back(component.evaluate(point));
  }
  return image;
}

OrbitReport orbit_single(const PolyMap& map, const RationalPoint& start,
                         std::uint64_t budget, std::uint64_t bit_guard) {
  check_arity(map, start);
  OrbitReport report;
  std::map<RationalPoint, std::uint64_t> first_seen;
  RationalPoint current = start;
  for (;;) {
    check_bit_guard(current, bit_guard);
    const auto it = first_seen.find(current);
    if (it != first_seen.end()) {
      report.status = OrbitStatus::Closed;
      report.tail = it->second;
      report.period = report.elements.size() - it->second;
      report.has_cycle_data = true;
      return report;
    }
    if (first_seen.size() >= budget) {
      report.status = OrbitStatus::ExceededBudget;
      return report;  // budget+1 distinct points have been seen
    }
    first_seen.emplace(current, report.elements.size());
    report.elements.push_back(current);
    current = apply_map(map, current);
  }
}

OrbitReport orbit_multi(const std::vector<PolyMap>& maps,
                        const RationalPoint& start, std::uint64_t budget,
                        std::uint64_t bit_guard) {
  if (maps.empty()) throw input_error("empty map list");
  for (const auto& m : maps) check_arity(m, start);

  OrbitReport report;
  std::set<RationalPoint> seen;
  std::deque<RationalPoint> frontier;
  check_bit_guard(start, bit_guard);
  seen.insert(start);
  report.elements.push_back(start);
  frontier.push_back(start);

  while (!frontier.empty()) {
    const RationalPoint point = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& map : maps) {
      RationalPoint image = apply_map(map, point);
      check_bit_guard(image, bit_guard);
      if (seen.count(image)) continue;
      if (seen.size() >= budget) {
        report.status = OrbitStatus::ExceededBudget;
        return report;
      }
      seen.insert(image);
      report.elements.push_back(image);
      frontier.push_back(std::move(image));
    }
  }
  report.status = OrbitStatus::Closed;
  return report;
}

Decision decide_single(const PolyMap& map, const RationalPoint& start,
                       std::optional<std::uint64_t> prime,
                       const DecideOptions& options) {
  check_arity(map, start);

  std::optional<UnramifiedReport> certification;
  std::uint64_t certified_prime = 0;
  bool budget_limited = false;

  auto try_prime = [&](std::uint64_t p) -> bool {
    if (mpz_divisible_ui_p(map.denominator().get_mpz_t(),
                           static_cast<unsigned long>(p))) {
      return false;
    }
    try {
      UnramifiedReport report =
          unramified_report(map, p, WitnessMode::AllPeriodicPoints,
                            options.point_budget, options.threads);
      if (!report.ok) return false;
      certification = std::move(report);
      certified_prime = p;
      return true;
    } catch (const budget_exceeded&) {
      budget_limited = true;
      return false;
    }
  };

  if (prime.has_value()) {
    if (!is_prime_u64(*prime)) throw input_error("supplied prime is not prime");
    if (!try_prime(*prime)) {
      if (budget_limited) {
        throw budget_exceeded("periodic-point check exceeds the point budget");
      }
      throw no_admissible_prime("map is not certified at the supplied prime");
    }
  } else {
    for (std::uint64_t p = 2; p <= options.prime_cap;
         p = next_prime_at_least(p + 1)) {
      if (try_prime(p)) break;
    }
    if (certified_prime == 0) {
      if (budget_limited) {
        throw budget_exceeded(
            "no prime within the search cap fits the point budget");
      }
      throw no_admissible_prime(
          "no prime within the search cap certifies the map");
    }
  }

  Decision decision;
  decision.prime = certified_prime;
  decision.certification = std::move(certification);
  decision.bound_used =
      single_map_bound(pow_int(certified_prime, map.arity()),
                       pezda_cycle_bound(map.arity()));

  const std::uint64_t budget =
      bound_to_budget(decision.bound_used, options.orbit_budget);
  OrbitReport orbit = orbit_single(map, start, budget, options.bit_guard);
  if (orbit.status == OrbitStatus::Closed) {
    decision.verdict = Verdict::Preperiodic;
    decision.orbit = std::move(orbit);
  } else {
    decision.verdict = Verdict::NotPreperiodic;
  }
  return decision;
}

Decision decide_multi(const std::vector<PolyMap>& maps,
                      const RationalPoint& start, const Integer& C,
                      std::uint64_t prime, const DecideOptions& options) {
  if (maps.empty()) throw input_error("empty map list");
  if (!is_prime_u64(prime)) throw input_error("supplied prime is not prime");
  const std::uint32_t arity = maps[0].arity();
  for (const auto& m : maps) {
    if (m.arity() != arity) throw input_error("maps must share one arity");
  }

  // Certification: reduced Jacobian determinant nowhere zero on F_p^n,
  // sufficient for unramifiedness at points.
  const std::uint64_t count =
      checked_point_count(prime, arity, options.point_budget);
  for (std::size_t mi = 0; mi < maps.size(); ++mi) {
    const PolynomialModP jac =
        reduce_mod_prime(jacobian_determinant(maps[mi]), prime);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (jac.evaluate(index_to_point(idx, prime, arity)) == 0) {
        throw map_not_certified(
            mi, "Jacobian determinant of map " + std::to_string(mi) +
                    " vanishes on F_p^n at p=" + std::to_string(prime));
      }
    }
  }

  Decision decision;
  decision.prime = prime;
  decision.bound_used =
      multi_map_bound(C, pow_int(prime, arity), Integer(maps.size()));

  const std::uint64_t budget =
      bound_to_budget(decision.bound_used, options.orbit_budget);
  OrbitReport orbit = orbit_multi(maps, start, budget, options.bit_guard);
  if (orbit.status == OrbitStatus::Closed) {
    decision.verdict = Verdict::Preperiodic;
    decision.orbit = std::move(orbit);
  } else {
    decision.verdict = Verdict::NotPreperiodic;
  }
  return decision;
}

bool tail_injectivity_check(const PolyMap& map, const RationalPoint& start,
                            std::uint64_t prime,
                            const DecideOptions& options) {
  const UnramifiedReport report =
      unramified_report(map, prime, WitnessMode::AllPeriodicPoints,
                        options.point_budget, options.threads);
  if (!report.ok) {
    throw map_not_certified(
        0, "map has a ramified periodic point mod the supplied prime");
  }

  const Integer bound = single_map_bound(pow_int(prime, map.arity()),
                                         pezda_cycle_bound(map.arity()));
  const std::uint64_t budget = bound_to_budget(bound, options.orbit_budget);
  const OrbitReport orbit =
      orbit_single(map, start, budget, options.bit_guard);
  if (orbit.status != OrbitStatus::Closed) {
    throw input_error("tail injectivity requires a closing orbit");
  }

  std::set<std::vector<std::uint64_t>> residues;
  for (std::uint64_t i = 0; i < orbit.tail; ++i) {
    if (!residues.insert(reduce_point(orbit.elements[i], prime)).second) {
      return false;
    }
  }
  return true;
}

}  // namespace finorb
