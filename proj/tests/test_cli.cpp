// Drives the installed CLI binary end to end: JSON schemas on stdout and
// the stable exit-code contract (0 ok, 1 negative verdict, 2 input error,
// 3 resource/budget error).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int failures = 0;

#define CLI_CHECK(cond)                                                     \
  do {                                                                      \
    if (!(cond)) {                                                          \
      ++failures;                                                           \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << #cond \
                << "\n";                                                    \
    }                                                                       \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(FINORB_CLI_PATH) + " " + args +
                              " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.stdout_text.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json parse_stdout(const RunResult& result) {
  try {
    return json::parse(result.stdout_text);
  } catch (...) {
    ++failures;
    std::cerr << "FAIL stdout is not a single JSON document:\n"
              << result.stdout_text << "\n";
    return json();
  }
}

std::filesystem::path write_fixture(const std::string& name,
                                    const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "finorb_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

int main() {
  const auto sq =
      write_fixture("sq.json", R"({"n":1,"N":1,"polys":["x1^2-3*x1"]})");
  const auto sq3 =
      write_fixture("sq3.json", R"({"n":1,"N":1,"polys":["x1^2-3*x1+3"]})");
  const auto fib = write_fixture(
      "fib.json", R"({"n":2,"N":1,"polys":["x1*x2","x1^2+x1*x2"]})");
  const auto bad = write_fixture("bad.json", R"({"n":1,"polys":)");

  // decide: preperiodic, exit 0, schema fields present
  {
    const auto r =
        run_cli("decide --map " + sq.string() + " --point 3 --prime 7");
    CLI_CHECK(r.exit_code == 0);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["verdict"] == "preperiodic");
    CLI_CHECK(doc["bound"] == "11");
    CLI_CHECK(doc["prime"] == 7);
    CLI_CHECK(doc["tail"] == 1);
    CLI_CHECK(doc["period"] == 1);
    CLI_CHECK(doc["orbit"] == json::parse(R"([["3"],["0"]])"));
    CLI_CHECK(doc["budgets"]["orbit_budget"] == 1000000);
  }

  // decide: negative verdict is exit 1, not a crash
  {
    const auto r =
        run_cli("decide --map " + sq.string() + " --point 1 --prime 7");
    CLI_CHECK(r.exit_code == 1);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["verdict"] == "not_preperiodic");
  }

  // decide with prime search
  {
    const auto r = run_cli("decide --map " + sq.string() + " --point 3");
    CLI_CHECK(r.exit_code == 0);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["verdict"] == "preperiodic");
  }

  // decide: fibonacci map has no admissible prime
  {
    const auto r =
        run_cli("decide --map " + fib.string() + " --point \"2,-1\"");
    CLI_CHECK(r.exit_code == 1);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["error"] == "no_admissible_prime");
  }

  // check-unramified: fibonacci counterexample
  {
    const auto r = run_cli("check-unramified --map " + fib.string() +
                           " --prime 5 --mode fixed");
    CLI_CHECK(r.exit_code == 1);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["ok"] == false);
    CLI_CHECK(doc["mode"] == "fixed");
    bool origin = false;
    for (const auto& w : doc["witnesses"]) {
      if (w["point"] == json::array({0, 0}) && w["jacobian"] == 0) {
        origin = true;
      }
    }
    CLI_CHECK(origin);
  }

  // check-unramified: clean case
  {
    const auto r = run_cli("check-unramified --map " + sq.string() +
                           " --prime 7 --mode periodic");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(parse_stdout(r)["ok"] == true);
  }

  // find-prime on x^2-3x: prime 2, Nk 15
  {
    const auto r = run_cli("find-prime --map " + sq.string());
    CLI_CHECK(r.exit_code == 0);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["prime"] == 2);
    CLI_CHECK(doc["Nk"] == 15);
    CLI_CHECK(doc["certificate"]["N"] == 15);
  }

  // find-prime: common zero is a sound negative
  {
    const auto r = run_cli("find-prime --map " + fib.string());
    CLI_CHECK(r.exit_code == 1);
    CLI_CHECK(parse_stdout(r)["error"] == "common_zero_exists");
  }

  // decide-multi: the constant-orbit pair is rejected at p=5 (J(4) = 0)
  {
    const auto r = run_cli("decide-multi --map " + sq.string() + " --map " +
                           sq3.string() + " --point 0 --C 1 --prime 5");
    CLI_CHECK(r.exit_code == 1);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["error"] == "map_not_certified");
  }

  // decide-multi: identity-jacobian pair at p=2
  {
    const auto a = write_fixture("c3a.json",
                                 R"({"n":1,"N":1,"polys":["x1+2*x1^2"]})");
    const auto b = write_fixture("c3b.json",
                                 R"({"n":1,"N":1,"polys":["x1+2*x1^3"]})");
    const auto r = run_cli("decide-multi --map " + a.string() + " --map " +
                           b.string() + " --point 0 --C 1 --prime 2");
    CLI_CHECK(r.exit_code == 0);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["verdict"] == "preperiodic");
    CLI_CHECK(doc["orbit"] == json::parse(R"([["0"]])"));
  }

  // bound subcommand covers every formula
  {
    auto r = run_cli("bound --kind pezda --n 2");
    CLI_CHECK(parse_stdout(r)["value"] == "24");
    r = run_cli("bound --kind single --point-count 49 --cycle-bound 24");
    CLI_CHECK(parse_stdout(r)["value"] == "73");
    r = run_cli("bound --kind dvr --point-count 7 --q 7 --d 1 --p 7 --vp 1");
    CLI_CHECK(parse_stdout(r)["value"] == "301");
    r = run_cli("bound --kind multi --C 4 --point-count 7 --s 1");
    CLI_CHECK(parse_stdout(r)["value"] ==
              "3053134545970524535745336759489912159909");
    r = run_cli("bound --kind corollary3 --C 1 --p 2 --n 2 --s 1");
    CLI_CHECK(parse_stdout(r)["value"] == "125");
    r = run_cli("bound --kind eventually-fixed --p 2 --n 1");
    CLI_CHECK(parse_stdout(r)["value"] == "2");
  }

  // count-points
  {
    const auto r = run_cli(
        "count-points --n 2 --prime 3 --equation \"x1^2+x2^2-1\"");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(parse_stdout(r)["count"] == 4);
    const auto empty = run_cli("count-points --n 2 --prime 5");
    CLI_CHECK(parse_stdout(empty)["count"] == 25);
  }

  // monomial-check
  {
    auto r = run_cli("monomial-check --matrix \"[[1,1],[0,1]]\" --prime 5");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(parse_stdout(r)["unramified"] == true);
    r = run_cli("monomial-check --matrix \"[[2,0],[0,3]]\" --prime 3");
    CLI_CHECK(r.exit_code == 1);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["unramified"] == false);
    CLI_CHECK(doc["det_mod_p"] == 0);
  }

  // lab subcommand summary
  {
    const auto r = run_cli("lab --trials 20 --seed 7 --max-size 12");
    CLI_CHECK(r.exit_code == 0);
    const auto doc = parse_stdout(r);
    CLI_CHECK(doc["trials"] == 20);
    CLI_CHECK(doc["failures"].empty());
  }

  // input errors are exit 2
  {
    CLI_CHECK(run_cli("frobnicate").exit_code == 2);
    CLI_CHECK(run_cli("decide --map " + bad.string() + " --point 1 --prime 7")
                  .exit_code == 2);
    CLI_CHECK(run_cli("decide --map /no/such/file --point 1 --prime 7")
                  .exit_code == 2);
    CLI_CHECK(run_cli("decide --map " + sq.string() +
                      " --point \"1,2\" --prime 7")
                  .exit_code == 2);
    CLI_CHECK(run_cli("check-unramified --map " + sq.string() +
                      " --prime 6 --mode fixed")
                  .exit_code == 2);
  }

  // budget exhaustion is exit 3
  {
    const auto r = run_cli("count-points --n 4 --prime 31 --point-budget 100");
    CLI_CHECK(r.exit_code == 3);
    const auto guard =
        run_cli("decide --map " + sq.string() +
                " --point 5 --prime 7 --bit-guard 64");
    CLI_CHECK(guard.exit_code == 3);
  }

  if (failures == 0) {
    std::cout << "cli tests: all passed\n";
    return 0;
  }
  std::cerr << "cli tests: " << failures << " failure(s)\n";
  return 1;
}
