#pragma once

#include <string>
#include <vector>

#include "firefront/geom.hpp"

namespace firefront {

enum class RunStatus { completed, extinguished };

inline const char* to_string(RunStatus s) { return s == RunStatus::completed ? "completed" : "extinguished"; }

struct StepDiagnostics {
  std::size_t step = 0;  ///< 1-based; front k is the result of step k
  double time = 0.0;     ///< minutes since epoch at the end of the step
  double dt = 0.0;
  double mean_head = 0.0;  ///< m/min over burning sources
  double mean_back = 0.0;
  std::size_t sources = 0;  ///< wavelet sources (Huygens) or frames built (frames)
  std::size_t stalled = 0;  ///< sources at or above the moisture cutoff
  double area = 0.0;        ///< m2 of the resulting front
};

struct RunResult {
  std::vector<FireFront> fronts;  ///< initial front first
  std::vector<StepDiagnostics> steps;
  RunStatus status = RunStatus::completed;
  std::vector<std::string> warnings;
};

}  // namespace firefront
