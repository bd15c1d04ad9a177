#include "finorb/json_io.hpp"

#include <fstream>

#include "finorb/errors.hpp"

namespace finorb {

namespace {

long long require_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw input_error(std::string("map file: missing integer field '") + key +
                      "'");
  }
  return doc[key].get<long long>();
}

}  // namespace

MapFile map_from_json(const json& doc) {
  if (!doc.is_object()) throw input_error("map file: expected a JSON object");
  const long long n = require_int(doc, "n");
  const long long N = require_int(doc, "N");
  if (n < 1) throw input_error("map file: n must be >= 1");
  if (N < 1) throw input_error("map file: N must be >= 1");
  if (!doc.contains("polys") || !doc["polys"].is_array()) {
    throw input_error("map file: missing 'polys' array");
  }
  const auto& polys = doc["polys"];
  if (polys.size() != static_cast<std::size_t>(n)) {
    throw input_error("map file: 'polys' must have exactly n entries");
  }
  std::vector<Polynomial> components;
  components.reserve(polys.size());
  for (const auto& entry : polys) {
    if (!entry.is_string()) {
      throw input_error("map file: 'polys' entries must be strings");
    }
    components.push_back(Polynomial::parse(entry.get<std::string>(),
                                           static_cast<std::uint32_t>(n)));
  }
  MapFile out{PolyMap(Integer(static_cast<long>(N)), std::move(components)), ""};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      throw input_error("map file: 'label' must be a string");
    }
    out.label = doc["label"].get<std::string>();
  }
  return out;
}

MapFile load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open map file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw input_error("map file is not valid JSON: " + std::string(e.what()));
  }
  return map_from_json(doc);
}

json map_to_json(const PolyMap& map, const std::string& label) {
  json doc;
  doc["n"] = map.arity();
  if (!map.denominator().fits_slong_p()) {
    throw input_error("map denominator too large for the file schema");
  }
  doc["N"] = map.denominator().get_si();
  json polys = json::array();
  for (const auto& c : map.components()) polys.push_back(c.to_string());
  doc["polys"] = std::move(polys);
  if (!label.empty()) doc["label"] = label;
  return doc;
}

RationalPoint parse_point(const std::string& text, std::uint32_t arity) {
  RationalPoint point;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (piece.empty()) throw input_error("empty coordinate in point");
    point.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (point.size() != arity) {
    throw input_error("point has " + std::to_string(point.size()) +
                      " coordinates, map expects " + std::to_string(arity));
  }
  return point;
}

json to_json(const UnramifiedReport& report) {
  json doc;
  doc["p"] = report.p;
  doc["mode"] =
      report.mode == WitnessMode::FixedPointsOnly ? "fixed" : "periodic";
  doc["ok"] = report.ok;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"point", w.point}, {"jacobian", w.jacobian}});
  }
  doc["witnesses"] = std::move(witnesses);
  doc["checked"] = report.checked_count;
  return doc;
}

json to_json(const BoundReport& report) {
  json inputs = json::object();
  for (const auto& [name, value] : report.inputs) {
    inputs[name] = value.get_str();
  }
  return {{"kind", report.kind},
          {"inputs", std::move(inputs)},
          {"value", report.value.get_str()}};
}

json to_json(const Certificate& cert) {
  json hs = json::array();
  for (const auto& h : cert.h) hs.push_back(h.to_string());
  if (!cert.N.fits_slong_p() || !cert.Nk.fits_slong_p()) {
    throw resource_error("certificate N does not fit the integer schema");
  }
  return {{"h", std::move(hs)},
          {"k", cert.k.get_num().get_str() + "/" + cert.k.get_den().get_str()},
          {"N", cert.N.get_si()},
          {"Nk", cert.Nk.get_si()}};
}

Certificate certificate_from_json(const json& doc, std::uint32_t arity) {
  Certificate cert;
  if (!doc.contains("h") || !doc["h"].is_array()) {
    throw input_error("certificate: missing 'h' array");
  }
  for (const auto& entry : doc["h"]) {
    cert.h.push_back(Polynomial::parse(entry.get<std::string>(), arity));
  }
  cert.k = parse_rational(doc.at("k").get<std::string>());
  cert.N = Integer(static_cast<long>(doc.at("N").get<long long>()));
  cert.Nk = Integer(static_cast<long>(doc.at("Nk").get<long long>()));
  return cert;
}

json orbit_elements_to_json(const OrbitReport& report) {
  json elements = json::array();
  for (const auto& point : report.elements) {
    json coords = json::array();
    for (const auto& c : point) coords.push_back(rational_to_string(c));
    elements.push_back(std::move(coords));
  }
  return elements;
}

json to_json(const Decision& decision) {
  json doc;
  doc["verdict"] = decision.verdict == Verdict::Preperiodic
                       ? "preperiodic"
                       : "not_preperiodic";
  doc["bound"] = decision.bound_used.get_str();
  doc["prime"] = decision.prime;
  if (decision.orbit.has_value()) {
    doc["orbit"] = orbit_elements_to_json(*decision.orbit);
    if (decision.orbit->has_cycle_data) {
      doc["tail"] = decision.orbit->tail;
      doc["period"] = decision.orbit->period;
    }
  }
  return doc;
}

}  // namespace finorb
