#include <doctest.h>

#include "finorb/errors.hpp"
#include "finorb/groebner.hpp"
#include "finorb/json_io.hpp"
#include "finorb/orbit.hpp"

using namespace finorb;

namespace {

Polynomial P(const char* text, std::uint32_t arity) {
  return Polynomial::parse(text, arity);
}

}  // namespace

TEST_CASE("map file: fixtures from the published schema") {
  const auto fib = map_from_json(
      json::parse(R"({"n":2,"N":1,"polys":["x1*x2","x1^2+x1*x2"]})"));
  CHECK(fib.map.arity() == 2);
  CHECK(fib.map.component(1) == P("x1^2+x1*x2", 2));

  const auto sq = map_from_json(
      json::parse(R"({"n":1,"N":1,"polys":["x1^2-3*x1"],"label":"pezda"})"));
  CHECK(sq.label == "pezda");

  const auto half =
      map_from_json(json::parse(R"({"n":1,"N":2,"polys":["1/2*x1"]})"));
  CHECK(half.map.denominator() == 2);
}

TEST_CASE("map file: schema violations") {
  CHECK_THROWS_AS(map_from_json(json::parse(R"({"n":2,"N":1,"polys":["x1"]})")),
                  input_error);
  CHECK_THROWS_AS(
      map_from_json(json::parse(R"({"n":1,"N":1,"polys":["1/2*x1"]})")),
      input_error);  // denominator mismatch
  CHECK_THROWS_AS(map_from_json(json::parse(R"({"N":1,"polys":["x1"]})")),
                  input_error);
  CHECK_THROWS_AS(map_from_json(json::parse(R"([1,2,3])")), input_error);
  CHECK_THROWS_AS(load_map("/nonexistent/f.json"), input_error);
}

TEST_CASE("map file: round-trip") {
  const auto doc =
      json::parse(R"({"n":2,"N":3,"polys":["1/3*x1","x2^2"],"label":"t"})");
  const auto loaded = map_from_json(doc);
  CHECK(map_to_json(loaded.map, loaded.label) == doc);
}

TEST_CASE("parse_point: rational coordinates") {
  CHECK(parse_point("5,-3", 2) ==
        RationalPoint{Rational(5), Rational(-3)});
  CHECK(parse_point("1/2,3", 2) ==
        RationalPoint{make_rational(1, 2), Rational(3)});
  CHECK_THROWS_AS(parse_point("1,2", 3), input_error);
  CHECK_THROWS_AS(parse_point("1,,2", 3), input_error);
  CHECK_THROWS_AS(parse_point("a", 1), input_error);
}

TEST_CASE("unramified report serialization matches the schema") {
  const auto report =
      unramified_report(PolyMap(1, {P("x1^2-3*x1", 1)}), 7,
                        WitnessMode::AllPeriodicPoints, 1000000);
  const auto doc = to_json(report);
  CHECK(doc["p"] == 7);
  CHECK(doc["mode"] == "periodic");
  CHECK(doc["ok"] == true);
  CHECK(doc["checked"] == 2);
  CHECK(doc["witnesses"].size() == 2);
  CHECK(doc["witnesses"][0]["point"] == json::array({0}));
  CHECK(doc["witnesses"][0]["jacobian"] == 4);
}

TEST_CASE("certificate serialization round-trip") {
  const PolyMap map(1, {P("x1^2-3*x1", 1)});
  const auto cert = unit_ideal_certificate(map);
  const auto doc = to_json(cert);
  CHECK(doc["Nk"] == 15);
  CHECK(doc["h"].is_array());
  const auto back = certificate_from_json(doc, 1);
  CHECK(verify_certificate(back, map));
  CHECK(back.Nk == cert.Nk);
}

TEST_CASE("decision serialization") {
  const PolyMap map(1, {P("x1^2-3*x1", 1)});
  const auto decision =
      decide_single(map, RationalPoint{Rational(3)}, 7);
  const auto doc = to_json(decision);
  CHECK(doc["verdict"] == "preperiodic");
  CHECK(doc["bound"] == "11");
  CHECK(doc["prime"] == 7);
  CHECK(doc["orbit"] == json::parse(R"([["3"],["0"]])"));
  CHECK(doc["tail"] == 1);
  CHECK(doc["period"] == 1);

  const auto negative =
      decide_single(map, RationalPoint{Rational(1)}, 7);
  const auto neg_doc = to_json(negative);
  CHECK(neg_doc["verdict"] == "not_preperiodic");
  CHECK(neg_doc.contains("orbit") == false);
}

TEST_CASE("bound report serialization uses decimal strings") {
  const auto doc = to_json(multi_map_report(4, 7, 1));
  CHECK(doc["kind"] == "multi");
  CHECK(doc["value"] == "3053134545970524535745336759489912159909");
  CHECK(doc["inputs"]["C"] == "4");
}
