#ifndef FINORB_JSON_IO_HPP
#define FINORB_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "finorb/bounds.hpp"
#include "finorb/groebner.hpp"
#include "finorb/modp.hpp"
#include "finorb/orbit.hpp"

namespace finorb {

using json = nlohmann::json;

// Map file schema: {"n": int, "N": int, "polys": [string...], "label"?: string}
struct MapFile {
  PolyMap map;
  std::string label;
};

MapFile map_from_json(const json& doc);
MapFile load_map(const std::string& path);
json map_to_json(const PolyMap& map, const std::string& label = "");

// Comma-separated rational coordinates: "5,-3" or "1/2,3".
RationalPoint parse_point(const std::string& text, std::uint32_t arity);

json to_json(const UnramifiedReport& report);
json to_json(const BoundReport& report);
json to_json(const Certificate& cert);
Certificate certificate_from_json(const json& doc, std::uint32_t arity);
json to_json(const Decision& decision);
json orbit_elements_to_json(const OrbitReport& report);

}  // namespace finorb

#endif
