#pragma once

// Calibration tables.
//   LFMC rows: stratum,ndvi,lst_k,doy,lfmc_pct
//   ROS rows:  ros_m_per_min,wind_m_per_s,moisture_pct

#include <string_view>
#include <vector>

#include "firefront/io/csv.hpp"
#include "firefront/lfmc.hpp"
#include "firefront/ros_correction.hpp"

namespace firefront::io {

/// `label_column` picks the grouping column (default "stratum").
inline std::vector<LabeledObservation> parse_lfmc_rows(std::string_view text,
                                                       std::string_view label_column = "stratum") {
  const CsvTable t = parse_csv(text);
  const std::size_t c_label = t.require(label_column);
  const std::size_t c_ndvi = t.require("ndvi"), c_lst = t.require("lst_k"), c_doy = t.require("doy"),
                    c_lfmc = t.require("lfmc_pct");
  std::vector<LabeledObservation> out;
  for (const CsvRow& row : t.rows) {
    LabeledObservation r;
    r.label = c_label < row.fields.size() ? row.fields[c_label] : "";
    r.obs.ndvi = number_field(t, row, c_ndvi);
    r.obs.lst = number_field(t, row, c_lst);
    r.obs.doy = number_field(t, row, c_doy);
    r.obs.lfmc = number_field(t, row, c_lfmc);
    try {
      r.obs.validate();
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), row.line);
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<RosObservation> parse_ros_rows(std::string_view text) {
  const CsvTable t = parse_csv(text);
  const std::size_t c_ros = t.require("ros_m_per_min"), c_u = t.require("wind_m_per_s"),
                    c_m = t.require("moisture_pct");
  std::vector<RosObservation> out;
  for (const CsvRow& row : t.rows)
    out.push_back({number_field(t, row, c_ros), number_field(t, row, c_u), number_field(t, row, c_m)});
  return out;
}

}  // namespace firefront::io
