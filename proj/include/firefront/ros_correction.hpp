#pragma once

// Exponential rate-of-spread model R = A U^alpha exp(-beta M), the
// satellite-to-regional correction derived from it, and its two calibration
// routes (literature ranges, log-linear regression on matched observations).
//
// Units follow the model as published: R in m/min, U in m/s, M in percent;
// A absorbs the mixed units.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "firefront/error.hpp"
#include "firefront/least_squares.hpp"

namespace firefront {

inline constexpr double kDefaultMoistureCutoff = 120.0;

struct RosModelParams {
  double scale_a = 1.0;      ///< m/min per (m/s)^alpha
  double wind_exp_alpha = 1.0;
  double moist_coef_beta = 0.0;  ///< per percent; stored positive, applied as exp(-beta M)
  double m_min = kDefaultMoistureCutoff;  ///< no spread at or above this moisture

  void validate() const {
    if (!(scale_a > 0.0)) throw ValidationError("ROS scale A must be > 0");
    if (!(wind_exp_alpha > 0.0)) throw ValidationError("wind exponent alpha must be > 0");
    if (!(moist_coef_beta > 0.0)) throw ValidationError("moisture coefficient beta must be > 0");
    if (!(m_min > 0.0)) throw ValidationError("moisture cutoff m_min must be > 0");
  }
};

/// Head and back fires are corrected with separate coefficients.
struct RosModelPair {
  RosModelParams head;
  RosModelParams back;
};

inline double base_ros(const RosModelParams& p, double wind, double moisture) {
  if (!(wind >= 0.0)) throw ValidationError("wind speed must be >= 0");
  if (moisture >= p.m_min) return 0.0;
  return p.scale_a * std::pow(wind, p.wind_exp_alpha) * std::exp(-p.moist_coef_beta * moisture);
}

/// Thermal rate observed under satellite-time conditions.
struct SatReference {
  double ros_thermal = 0.0;   ///< m/min
  double wind_sat = 1.0;      ///< m/s
  double moisture_sat = 0.0;  ///< percent
};

/// Multiplicative factor (U_reg / U_sat)^alpha exp(-beta (M_reg - M_sat)).
inline double correction_factor(const RosModelParams& p, double wind_sat, double moisture_sat, double wind_reg,
                                double moisture_reg) {
  if (!(wind_sat > 0.0)) throw ValidationError("satellite-time wind speed must be > 0 (division by zero)");
  if (!(wind_reg >= 0.0)) throw ValidationError("regional wind speed must be >= 0");
  return std::pow(wind_reg / wind_sat, p.wind_exp_alpha) * std::exp(-p.moist_coef_beta * (moisture_reg - moisture_sat));
}

inline double correct_ros(const SatReference& ref, const RosModelParams& p, double wind_reg, double moisture_reg) {
  const double factor = correction_factor(p, ref.wind_sat, ref.moisture_sat, wind_reg, moisture_reg);
  if (moisture_reg >= p.m_min) return 0.0;
  return ref.ros_thermal * factor;
}

struct RosObservation {
  double ros = 0.0;       ///< m/min
  double wind = 0.0;      ///< m/s
  double moisture = 0.0;  ///< percent
};

struct RosCalibration {
  RosModelParams params;  ///< m_min left at its default; the fit does not estimate it
  FitReport report;       ///< scored in log space
};

/// Regression of ln R on [1, ln U, M]: ln R = ln A + alpha ln U - beta M.
inline RosCalibration calibrate_ros(const std::vector<RosObservation>& rows) {
  if (rows.size() < 3) throw ValidationError("ROS calibration needs at least 3 rows, got " + std::to_string(rows.size()));
  Design d;
  d.names = {"intercept", "ln_wind", "moisture"};
  std::vector<double> y;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (!(r.ros > 0.0) || !(r.wind > 0.0))
      throw ValidationError("row " + std::to_string(i + 1) + ": rate of spread and wind must be > 0 for the log fit");
    d.rows.push_back({1.0, std::log(r.wind), r.moisture});
    y.push_back(std::log(r.ros));
  }
  const auto beta = fit_ols(d, y);
  RosCalibration out;
  out.params.scale_a = std::exp(beta[0]);
  out.params.wind_exp_alpha = beta[1];
  out.params.moist_coef_beta = -beta[2];

  std::vector<double> pred;
  for (const auto& row : d.rows) pred.push_back(beta[0] + beta[1] * row[1] + beta[2] * row[2]);
  out.report = score_predictions(y, pred);
  if (out.params.wind_exp_alpha <= 0.0) out.report.warnings.push_back("fitted alpha <= 0: spread does not grow with wind");
  if (out.params.moist_coef_beta <= 0.0) out.report.warnings.push_back("fitted beta <= 0: moisture does not damp spread");
  return out;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return lo <= v && v <= hi; }
};

struct LiteratureRange {
  Interval alpha;
  Interval beta;
};

/// Literature ranges: alpha by fuel class, beta by moisture class.
inline LiteratureRange params_from_literature(const std::string& fuel_class, const std::string& moisture_class) {
  LiteratureRange r;
  if (fuel_class == "grass") r.alpha = {1.0, 1.5};
  else if (fuel_class == "shrub") r.alpha = {0.8, 1.2};
  else if (fuel_class == "forest-litter") r.alpha = {0.3, 0.8};
  else throw ValidationError("unknown fuel class '" + fuel_class + "' (grass, shrub, forest-litter)");

  if (moisture_class == "dry") r.beta = {0.05, 0.1};
  else if (moisture_class == "moderate") r.beta = {0.1, 0.15};
  else if (moisture_class == "live-green") r.beta = {0.15, 0.25};
  else throw ValidationError("unknown moisture class '" + moisture_class + "' (dry, moderate, live-green)");
  return r;
}

/// Range of corrected rates over the corners of a literature box. The
/// correction is monotone in alpha and in beta, so the corners bound it.
inline Interval correct_ros_range(const SatReference& ref, const LiteratureRange& range, double wind_reg,
                                  double moisture_reg, double m_min = kDefaultMoistureCutoff) {
  Interval out{INFINITY, -INFINITY};
  for (double a : {range.alpha.lo, range.alpha.hi})
    for (double b : {range.beta.lo, range.beta.hi}) {
      RosModelParams p{1.0, a, b, m_min};
      const double v = correct_ros(ref, p, wind_reg, moisture_reg);
      out.lo = std::min(out.lo, v);
      out.hi = std::max(out.hi, v);
    }
  return out;
}

}  // namespace firefront
