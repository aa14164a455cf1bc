#pragma once

// One row per front vertex: step_index,time_minutes,vertex,x_m,y_m,lon,lat

#include <cstdio>
#include <string>

#include "firefront/projection.hpp"
#include "firefront/run_result.hpp"

namespace firefront::io {

inline std::string write_fronts_csv(const RunResult& result, const LocalProjection& proj) {
  std::string out = "step_index,time_minutes,vertex,x_m,y_m,lon,lat\n";
  char buf[256];
  for (std::size_t k = 0; k < result.fronts.size(); ++k) {
    const FireFront& f = result.fronts[k];
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Point2 p = f.ring()[i];
      const LonLat ll = proj.inverse(p);
      std::snprintf(buf, sizeof buf, "%zu,%.6f,%zu,%.6f,%.6f,%.10f,%.10f\n", k, f.time(), i, p.x, p.y, ll.lon, ll.lat);
      out += buf;
    }
  }
  return out;
}

inline std::string write_diagnostics_csv(const RunResult& result) {
  std::string out = "step,time_minutes,dt_minutes,mean_head_m_per_min,mean_back_m_per_min,sources,stalled,area_m2\n";
  char buf[256];
  for (const auto& d : result.steps) {
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%.6f,%.6f,%zu,%zu,%.3f\n", d.step, d.time, d.dt, d.mean_head,
                  d.mean_back, d.sources, d.stalled, d.area);
    out += buf;
  }
  return out;
}

}  // namespace firefront::io
