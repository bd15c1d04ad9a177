// finorb: exact preperiodicity decisions, certificates and orbit bounds
// for polynomial self-maps of affine n-space, plus a finite-dynamics lab.
//
// Every subcommand prints a single JSON document on stdout; diagnostics go
// to stderr. Exit codes: 0 success, 1 sound negative verdict, 2 input
// error, 3 resource/budget error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "finorb/bounds.hpp"
#include "finorb/errors.hpp"
#include "finorb/groebner.hpp"
#include "finorb/json_io.hpp"
#include "finorb/lab.hpp"
#include "finorb/modp.hpp"
#include "finorb/orbit.hpp"

namespace {

using finorb::json;

struct Budgets {
  std::uint64_t point_budget = 10000000;
  std::uint64_t orbit_budget = 1000000;
  std::uint64_t bit_guard = 1000000;
  unsigned threads = std::thread::hardware_concurrency();
};

json budgets_json(const Budgets& b) {
  return {{"point_budget", b.point_budget},
          {"orbit_budget", b.orbit_budget},
          {"bit_guard", b.bit_guard}};
}

finorb::DecideOptions decide_options(const Budgets& b, std::uint64_t cap) {
  finorb::DecideOptions opt;
  opt.point_budget = b.point_budget;
  opt.orbit_budget = b.orbit_budget;
  opt.bit_guard = b.bit_guard;
  opt.prime_cap = cap;
  opt.threads = b.threads == 0 ? 1 : b.threads;
  return opt;
}

void emit(const json& doc) { std::cout << doc.dump(2) << std::endl; }

std::vector<std::vector<finorb::Integer>> parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    throw finorb::input_error("matrix must be a JSON array of integer rows");
  }
  if (!doc.is_array() || doc.empty()) {
    throw finorb::input_error("matrix must be a nonempty array of rows");
  }
  std::vector<std::vector<finorb::Integer>> m;
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != doc.size()) {
      throw finorb::input_error("matrix must be square");
    }
    std::vector<finorb::Integer> out_row;
    for (const auto& entry : row) {
      if (!entry.is_number_integer()) {
        throw finorb::input_error("matrix entries must be integers");
      }
      out_row.emplace_back(static_cast<long>(entry.get<long long>()));
    }
    m.push_back(std::move(out_row));
  }
  return m;
}

int run(int argc, char** argv) {
  CLI::App app{"exact orbit bounds and preperiodicity decisions"};
  app.require_subcommand(1);
  app.fallthrough();  // budget flags may follow the subcommand

  Budgets budgets;
  app.add_option("--point-budget", budgets.point_budget,
                 "max points for exhaustive F_p^n enumeration");
  app.add_option("--orbit-budget", budgets.orbit_budget,
                 "max distinct points per orbit iteration");
  app.add_option("--bit-guard", budgets.bit_guard,
                 "max bits per orbit coordinate");
  app.add_option("--threads", budgets.threads, "worker thread cap");

  // decide
  auto* decide = app.add_subcommand("decide", "single-map preperiodicity");
  std::string map_path, point_text;
  std::optional<std::uint64_t> prime_opt;
  std::uint64_t prime_cap = 200;
  decide->add_option("--map", map_path, "map file (JSON)")->required();
  decide->add_option("--point", point_text, "start point, e.g. \"1/2,3\"")
      ->required();
  std::uint64_t decide_prime = 0;
  auto* decide_prime_opt =
      decide->add_option("--prime", decide_prime, "certification prime");
  decide->add_option("--prime-cap", prime_cap,
                     "prime search ceiling when --prime is absent");

  // decide-multi
  auto* decide_multi =
      app.add_subcommand("decide-multi", "map-system finiteness");
  std::vector<std::string> multi_paths;
  std::string multi_point;
  long long whang_c = 0;
  std::uint64_t multi_prime = 0;
  decide_multi->add_option("--map", multi_paths, "map file, repeatable")
      ->required();
  decide_multi->add_option("--point", multi_point, "start point")->required();
  decide_multi->add_option("--C", whang_c, "periodic-orbit constant C(X,R)")
      ->required();
  decide_multi->add_option("--prime", multi_prime, "certification prime")
      ->required();

  // check-unramified
  auto* check = app.add_subcommand("check-unramified",
                                   "Jacobian at fixed/periodic points mod p");
  std::string check_map, check_mode = "periodic";
  std::uint64_t check_prime = 0;
  check->add_option("--map", check_map, "map file")->required();
  check->add_option("--prime", check_prime, "prime p")->required();
  check->add_option("--mode", check_mode, "fixed | periodic")
      ->check(CLI::IsMember({"fixed", "periodic"}));

  // find-prime
  auto* find_prime =
      app.add_subcommand("find-prime", "Nullstellensatz certificate prime");
  std::string fp_map;
  std::uint64_t fp_start = 2;
  find_prime->add_option("--map", fp_map, "map file")->required();
  find_prime->add_option("--start", fp_start, "search start");

  // bound
  auto* bound = app.add_subcommand("bound", "orbit-size bound formulas");
  std::string bound_kind;
  long long b_n = 0, b_d = 0, b_vp = 1, b_s = 1, b_C = 1;
  std::string b_point_count = "1", b_cycle = "1", b_q = "1", b_p = "2";
  bound->add_option("--kind", bound_kind,
                    "pezda | single | dvr | multi | corollary3 | "
                    "eventually-fixed")
      ->required()
      ->check(CLI::IsMember({"pezda", "single", "dvr", "multi", "corollary3",
                             "eventually-fixed"}));
  bound->add_option("--n", b_n, "dimension n");
  bound->add_option("--point-count", b_point_count, "|X(R/m)|");
  bound->add_option("--cycle-bound", b_cycle, "periodic cycle bound");
  bound->add_option("--q", b_q, "residue field size");
  bound->add_option("--d", b_d, "special fiber dimension");
  bound->add_option("--p", b_p, "residue characteristic");
  bound->add_option("--vp", b_vp, "valuation of p");
  bound->add_option("--s", b_s, "number of maps |S|");
  bound->add_option("--C", b_C, "periodic-orbit constant C(X,R)");

  // count-points
  auto* count = app.add_subcommand("count-points",
                                   "common zeros of equations over F_p^n");
  long long count_n = 0;
  std::uint64_t count_prime = 0;
  std::vector<std::string> count_eqs;
  count->add_option("--n", count_n, "arity")->required();
  count->add_option("--prime", count_prime, "prime p")->required();
  count->add_option("--equation", count_eqs, "equation, repeatable");

  // monomial-check
  auto* monomial = app.add_subcommand(
      "monomial-check", "det(A) mod p criterion for monomial maps");
  std::string matrix_text;
  std::uint64_t monomial_prime = 0;
  monomial->add_option("--matrix", matrix_text, "JSON rows, e.g. [[1,1],[0,1]]")
      ->required();
  monomial->add_option("--prime", monomial_prime, "prime p")->required();

  // lab
  auto* lab = app.add_subcommand("lab", "combinatorial lemma verification");
  std::uint64_t lab_trials = 1000, lab_seed = 1;
  std::uint32_t lab_max_size = 40, lab_max_maps = 3, lab_paths_up_to = 12,
                lab_guard = 12;
  lab->add_option("--trials", lab_trials, "number of random systems");
  lab->add_option("--seed", lab_seed, "base seed");
  lab->add_option("--max-size", lab_max_size, "max system size");
  lab->add_option("--max-maps", lab_max_maps, "max maps per system");
  lab->add_option("--exhaustive-paths-up-to", lab_paths_up_to,
                  "orbit size cap for exhaustive path enumeration");
  lab->add_option("--check-periodic-guard", lab_guard,
                  "C! guard for the periodicity criterion (max 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return 2;
  }
  const unsigned threads = budgets.threads == 0 ? 1 : budgets.threads;

  if (*decide) {
    const auto loaded = finorb::load_map(map_path);
    const auto point = finorb::parse_point(point_text, loaded.map.arity());
    if (decide_prime_opt->count() > 0) prime_opt = decide_prime;
    const auto decision = finorb::decide_single(
        loaded.map, point, prime_opt, decide_options(budgets, prime_cap));
    json doc = finorb::to_json(decision);
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return decision.verdict == finorb::Verdict::Preperiodic ? 0 : 1;
  }

  if (*decide_multi) {
    std::vector<finorb::PolyMap> maps;
    for (const auto& path : multi_paths) {
      maps.push_back(finorb::load_map(path).map);
    }
    const auto point = finorb::parse_point(multi_point, maps[0].arity());
    if (whang_c < 1) throw finorb::input_error("--C must be >= 1");
    const auto decision = finorb::decide_multi(
        maps, point, finorb::Integer(static_cast<long>(whang_c)), multi_prime,
        decide_options(budgets, 0));
    json doc = finorb::to_json(decision);
    doc["maps"] = multi_paths.size();
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return decision.verdict == finorb::Verdict::Preperiodic ? 0 : 1;
  }

  if (*check) {
    const auto loaded = finorb::load_map(check_map);
    const auto mode = check_mode == "fixed"
                          ? finorb::WitnessMode::FixedPointsOnly
                          : finorb::WitnessMode::AllPeriodicPoints;
    if (!finorb::is_prime_u64(check_prime)) {
      throw finorb::input_error("--prime must be prime");
    }
    const auto report = finorb::unramified_report(
        loaded.map, check_prime, mode, budgets.point_budget, threads);
    json doc = finorb::to_json(report);
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return report.ok ? 0 : 1;
  }

  if (*find_prime) {
    const auto loaded = finorb::load_map(fp_map);
    const auto cert = finorb::unit_ideal_certificate(loaded.map);
    const auto prime = finorb::select_prime(cert, loaded.map, fp_start);
    json doc;
    doc["prime"] = prime;
    doc["Nk"] = cert.Nk.get_si();
    doc["certificate"] = finorb::to_json(cert);
    doc["eventually_fixed_bound"] =
        finorb::eventually_fixed_bound(
            finorb::Integer(static_cast<unsigned long>(prime)),
            loaded.map.arity())
            .get_str();
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return 0;
  }

  if (*bound) {
    using finorb::Integer;
    finorb::BoundReport report;
    const auto as_int = [](const std::string& s) { return Integer(s); };
    if (bound_kind == "pezda") {
      report = finorb::pezda_report(static_cast<std::uint32_t>(b_n));
    } else if (bound_kind == "single") {
      report = finorb::single_map_report(as_int(b_point_count), as_int(b_cycle));
    } else if (bound_kind == "dvr") {
      report = finorb::dvr_report(as_int(b_point_count), as_int(b_q),
                                  static_cast<std::uint32_t>(b_d), as_int(b_p),
                                  static_cast<std::uint32_t>(b_vp));
    } else if (bound_kind == "multi") {
      report = finorb::multi_map_report(Integer(static_cast<long>(b_C)),
                                        as_int(b_point_count),
                                        Integer(static_cast<long>(b_s)));
    } else if (bound_kind == "corollary3") {
      report = finorb::corollary3_report(Integer(static_cast<long>(b_C)),
                                         as_int(b_p),
                                         static_cast<std::uint32_t>(b_n),
                                         Integer(static_cast<long>(b_s)));
    } else {
      report = finorb::eventually_fixed_report(
          as_int(b_p), static_cast<std::uint32_t>(b_n));
    }
    json doc = finorb::to_json(report);
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return 0;
  }

  if (*count) {
    if (count_n < 1) throw finorb::input_error("--n must be >= 1");
    std::vector<finorb::Polynomial> eqs;
    for (const auto& text : count_eqs) {
      eqs.push_back(finorb::Polynomial::parse(
          text, static_cast<std::uint32_t>(count_n)));
    }
    const auto total = finorb::count_affine_points(
        eqs, static_cast<std::uint32_t>(count_n), count_prime,
        budgets.point_budget, threads);
    json doc;
    doc["p"] = count_prime;
    doc["n"] = count_n;
    doc["equations"] = count_eqs;
    doc["count"] = total;
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return 0;
  }

  if (*monomial) {
    const auto m = parse_matrix(matrix_text);
    const auto det = finorb::integer_determinant(m);
    const bool ok = finorb::monomial_unramified(m, monomial_prime);
    json doc;
    doc["p"] = monomial_prime;
    doc["det"] = det.get_str();
    doc["det_mod_p"] = finorb::mod_p(det, monomial_prime);
    doc["unramified"] = ok;
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return ok ? 0 : 1;
  }

  if (*lab) {
    json failures = json::array();
    for (std::uint64_t t = 0; t < lab_trials; ++t) {
      const std::uint64_t seed = lab_seed + t;
      std::uint64_t state = seed;
      const std::uint32_t size = static_cast<std::uint32_t>(
          1 + finorb::splitmix64_next(state) % lab_max_size);
      const std::uint32_t nmaps = static_cast<std::uint32_t>(
          1 + finorb::splitmix64_next(state) % lab_max_maps);
      const auto sys = finorb::random_system(seed, size, nmaps);
      const std::uint64_t c_true = finorb::max_periodic_orbit_size(sys);
      for (std::uint32_t x = 0; x < sys.size; ++x) {
        auto record = [&](const char* lemma) {
          failures.push_back(
              {{"seed", seed}, {"point", x}, {"lemma", lemma}});
        };
        if (!finorb::verify_manymap_inequality(sys, x)) {
          record("manymap_inequality");
        }
        if (!finorb::verify_level_monotone(sys, x)) {
          record("level_monotone");
        }
        const auto orbit = finorb::orbit_of(sys, x);
        if (orbit.size() <= lab_paths_up_to) {
          if (!finorb::verify_level_lemmas(
                  sys, x, std::max(lab_paths_up_to, 1u))) {
            record("level_lemmas");
          }
          const std::uint64_t c_used = std::max<std::uint64_t>(c_true, 1);
          if (c_used <= lab_guard &&
              !finorb::verify_check_periodic(sys, x, c_used, lab_guard)) {
            record("check_periodic");
          }
        }
      }
    }
    json doc;
    doc["trials"] = lab_trials;
    doc["failures"] = failures;
    doc["budgets"] = budgets_json(budgets);
    emit(doc);
    return failures.empty() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const finorb::common_zero_exists& e) {
    emit({{"error", "common_zero_exists"}, {"message", e.what()}});
    return 1;
  } catch (const finorb::no_admissible_prime& e) {
    emit({{"error", "no_admissible_prime"}, {"message", e.what()}});
    return 1;
  } catch (const finorb::map_not_certified& e) {
    emit({{"error", "map_not_certified"},
          {"map_index", e.map_index()},
          {"message", e.what()}});
    return 1;
  } catch (const finorb::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const finorb::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
