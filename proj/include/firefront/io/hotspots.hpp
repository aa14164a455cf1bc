#pragma once

// FIRMS-style active-fire CSV. Required columns: latitude, longitude,
// acq_date (YYYY-MM-DD), acq_time (HHMM, UTC). Optional: frp, confidence.
// Malformed rows are reported as warnings and left out.

#include <string>
#include <string_view>
#include <vector>

#include "firefront/error.hpp"
#include "firefront/front_tracking.hpp"
#include "firefront/io/csv.hpp"
#include "firefront/io/time.hpp"
#include "firefront/projection.hpp"

namespace firefront::io {

struct RowWarning {
  std::size_t line = 0;
  std::string message;
};

struct HotspotParseResult {
  std::vector<HotspotRecord> records;
  std::vector<RowWarning> warnings;
};

/// `epoch_minutes` is subtracted from every timestamp (minutes since Unix epoch).
inline HotspotParseResult parse_hotspot_csv(std::string_view text, const LocalProjection& proj,
                                            double epoch_minutes = 0.0) {
  const CsvTable t = parse_csv(text);
  const std::size_t c_lat = t.require("latitude"), c_lon = t.require("longitude");
  const std::size_t c_date = t.require("acq_date"), c_time = t.require("acq_time");
  const auto c_frp = t.column("frp");
  const auto c_conf = t.column("confidence");

  HotspotParseResult out;
  for (const CsvRow& row : t.rows) {
    try {
      if (row.fields.size() != t.header.size())
        throw ValidationError("expected " + std::to_string(t.header.size()) + " fields, got " +
                              std::to_string(row.fields.size()));
      const double lat = number_field(t, row, c_lat);
      const double lon = number_field(t, row, c_lon);
      if (!(lat >= -90.0 && lat <= 90.0)) throw ValidationError("latitude " + row.fields[c_lat] + " out of range");
      if (!(lon >= -180.0 && lon <= 180.0)) throw ValidationError("longitude " + row.fields[c_lon] + " out of range");
      HotspotRecord r;
      r.lat = lat;
      r.lon = lon;
      r.position = proj.forward({lon, lat});
      r.time = parse_date_minutes(row.fields[c_date]) + parse_hhmm_minutes(row.fields[c_time]) - epoch_minutes;
      if (c_frp && !row.fields[*c_frp].empty()) {
        const double frp = number_field(t, row, *c_frp);
        if (frp < 0.0) throw ValidationError("negative frp");
        r.frp = frp;
      }
      if (c_conf && !row.fields[*c_conf].empty()) r.confidence = row.fields[*c_conf];
      out.records.push_back(std::move(r));
    } catch (const ValidationError& e) {
      out.warnings.push_back({row.line, e.what()});
    }
  }
  if (out.records.empty()) {
    std::string msg = "no valid hotspot rows";
    if (!out.warnings.empty()) msg += " (first problem at line " + std::to_string(out.warnings.front().line) + ": " +
                                      out.warnings.front().message + ")";
    throw ParseError(msg, t.rows.empty() ? 1 : t.rows.front().line);
  }
  return out;
}

}  // namespace firefront::io
