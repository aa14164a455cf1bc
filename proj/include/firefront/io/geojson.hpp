#pragma once

// Fronts as an RFC 7946 FeatureCollection: one Polygon per front, exterior
// ring closed and counterclockwise, coordinates in lon/lat degrees.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "firefront/error.hpp"
#include "firefront/projection.hpp"
#include "firefront/run_result.hpp"

namespace firefront::io {

inline nlohmann::json fronts_to_geojson(const std::vector<FireFront>& fronts, const LocalProjection& proj) {
  nlohmann::json features = nlohmann::json::array();
  for (std::size_t k = 0; k < fronts.size(); ++k) {
    const FireFront& f = fronts[k];
    nlohmann::json ring = nlohmann::json::array();
    for (Point2 p : f.ring()) {
      const LonLat ll = proj.inverse(p);
      ring.push_back({ll.lon, ll.lat});
    }
    ring.push_back(ring.front());
    features.push_back({{"type", "Feature"},
                        {"properties", {{"time_minutes", f.time()}, {"step_index", k}, {"area_m2", f.area()}}},
                        {"geometry", {{"type", "Polygon"}, {"coordinates", nlohmann::json::array({ring})}}}});
  }
  return {{"type", "FeatureCollection"}, {"features", features}};
}

inline std::string write_fronts_geojson(const RunResult& result, const LocalProjection& proj) {
  nlohmann::json doc = fronts_to_geojson(result.fronts, proj);
  doc["status"] = to_string(result.status);
  return doc.dump(1) + "\n";
}

struct GeoJsonFront {
  std::vector<LonLat> ring;  ///< open (closing vertex removed)
  double time_minutes = 0.0;
  std::size_t step_index = 0;
  double area_m2 = 0.0;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline std::vector<GeoJsonFront> parse_fronts_geojson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [l, c] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("invalid JSON: ") + e.what(), l, c);
  }
  auto fail = [](const std::string& what, std::size_t feature) -> ParseError {
    return ParseError("feature " + std::to_string(feature) + ": " + what, 1);
  };
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features") ||
      !doc["features"].is_array())
    throw ParseError("expected a FeatureCollection with a features array", 1);

  std::vector<GeoJsonFront> out;
  std::size_t idx = 0;
  for (const auto& feat : doc["features"]) {
    const auto& geom = feat.contains("geometry") ? feat["geometry"] : nlohmann::json();
    if (!geom.is_object() || geom.value("type", "") != "Polygon") throw fail("geometry must be a Polygon", idx);
    const auto& rings = geom["coordinates"];
    if (!rings.is_array() || rings.empty() || !rings[0].is_array()) throw fail("missing exterior ring", idx);
    GeoJsonFront f;
    for (const auto& pos : rings[0]) {
      if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number())
        throw fail("positions must be [lon, lat] number pairs", idx);
      f.ring.push_back({pos[0].get<double>(), pos[1].get<double>()});
    }
    if (f.ring.size() < 4) throw fail("exterior ring needs at least 4 positions", idx);
    if (f.ring.front().lon != f.ring.back().lon || f.ring.front().lat != f.ring.back().lat)
      throw fail("exterior ring is not closed", idx);
    f.ring.pop_back();
    if (feat.contains("properties") && feat["properties"].is_object()) {
      const auto& p = feat["properties"];
      f.time_minutes = p.value("time_minutes", 0.0);
      f.step_index = p.value("step_index", idx);
      f.area_m2 = p.value("area_m2", 0.0);
    } else {
      f.step_index = idx;
    }
    out.push_back(std::move(f));
    ++idx;
  }
  return out;
}

/// Reprojects parsed fronts onto the local plane.
inline std::vector<FireFront> fronts_from_geojson(const std::vector<GeoJsonFront>& parsed,
                                                  const LocalProjection& proj) {
  std::vector<FireFront> out;
  for (const auto& g : parsed) {
    Ring ring;
    for (LonLat ll : g.ring) ring.push_back(proj.forward(ll));
    out.push_back(FireFront::from_ring(std::move(ring), g.time_minutes));
  }
  return out;
}

}  // namespace firefront::io
