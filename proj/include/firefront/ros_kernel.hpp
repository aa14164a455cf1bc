#pragma once

// Generalized elliptical rate-of-spread kernel:
//
//   r(theta) = a b / sqrt(a^2 cos^2(phi) + b^2 sin^2(phi)) + c cos(phi),
//   phi = theta - (wind_dir + max_spread_dir),
//   b = (R_H + R_B) / 2,  c = (R_H - R_B) / 2,
//
// so r = R_H downwind, r = R_B upwind and r = a across the wind.

#include <cmath>
#include <optional>
#include <string>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"

namespace firefront {

/// Head-fire and backfire rates of spread, m/min.
struct RosPair {
  double head = 0.0;
  double back = 0.0;

  bool burning() const { return head + back > 0.0; }

  void validate() const {
    if (!std::isfinite(head) || !std::isfinite(back)) throw ValidationError("rate of spread must be finite");
    if (head < 0.0 || back < 0.0) throw ValidationError("rate of spread must be non-negative");
  }
};

/// Local environment at a point and time.
struct EnvSample {
  double wind_speed = 0.0;              ///< m/s
  Angle wind_dir{};                     ///< direction the fire is pushed toward
  std::optional<Angle> max_spread_dir;  ///< offset from the wind direction; absent = 0
  double moisture = 0.0;                ///< live fuel moisture, percent

  void validate() const {
    if (!(wind_speed >= 0.0) || !std::isfinite(wind_speed)) throw ValidationError("wind speed must be >= 0");
    if (!(moisture >= 0.0) || !std::isfinite(moisture)) throw ValidationError("moisture must be >= 0");
  }
};

/// How the cross-wind parameter `a` is derived from the rates and the wind.
enum class FlankModel {
  /// a = (R_H + R_B) / (2 (1 + 0.25 U)): breadth = length / (1 + 0.25 U).
  length_to_breadth,
  /// a = (1 + 0.25 U) / (2 (R_H + R_B)), the expression exactly as printed.
  as_printed,
};

inline FlankModel parse_flank_model(const std::string& s) {
  if (s == "length_to_breadth") return FlankModel::length_to_breadth;
  if (s == "as_printed") return FlankModel::as_printed;
  throw ValidationError("unknown flank_model '" + s + "' (expected length_to_breadth or as_printed)");
}

struct EllipseParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Angle orientation{};
};

inline EllipseParams compute_abc(const RosPair& ros, const EnvSample& env,
                                 FlankModel flank = FlankModel::length_to_breadth) {
  ros.validate();
  env.validate();
  const double total = ros.head + ros.back;
  if (!(total > 0.0)) throw DegenerateInputError("zero total spread (R_H + R_B = 0)");
  const double lb = 1.0 + 0.25 * env.wind_speed;
  EllipseParams p;
  p.a = flank == FlankModel::as_printed ? lb / (2.0 * total) : total / (2.0 * lb);
  p.b = 0.5 * total;
  p.c = 0.5 * (ros.head - ros.back);
  p.orientation = env.max_spread_dir ? env.wind_dir + *env.max_spread_dir : env.wind_dir;
  return p;
}

/// r(theta) in m/min. Not clamped: the rate can dip below zero on the rear
/// flanks for strongly asymmetric inputs.
inline double directional_ros(const EllipseParams& p, Angle theta) {
  const double phi = theta.radians() - p.orientation.radians();
  const double cs = std::cos(phi), sn = std::sin(phi);
  return p.a * p.b / std::sqrt(p.a * p.a * cs * cs + p.b * p.b * sn * sn) + p.c * cs;
}

/// Smallest radius (as a fraction of the head radius) used where r(theta) <= 0,
/// keeping wavelets star-shaped around their centre.
inline constexpr double kWaveletRadiusFloor = 1e-6;

/// Vertices of the secondary wavelet: center + r(theta_k) dt u(theta_k), with
/// theta_k = orientation + 2 pi k / n_theta (CCW). Sampling is phase-locked to
/// the head direction so the head and back extremes are vertices.
inline Ring wavelet_ring(const EllipseParams& p, Point2 center, double dt, int n_theta) {
  if (!(dt > 0.0)) throw ValidationError("wavelet duration must be positive");
  if (n_theta < 16) throw ValidationError("n_theta must be >= 16");
  if (!(p.b > 0.0) || !(p.a > 0.0)) throw DegenerateInputError("degenerate ellipse parameters");
  const double floor = kWaveletRadiusFloor * (p.b + std::fabs(p.c)) * dt;
  Ring ring;
  ring.reserve(static_cast<std::size_t>(n_theta));
  for (int k = 0; k < n_theta; ++k) {
    const Angle theta = p.orientation + Angle::from_radians(kTwoPi * k / n_theta);
    const double radius = std::max(directional_ros(p, theta) * dt, floor);
    ring.push_back(center + radius * theta.unit());
  }
  return ring;
}

inline FireFront wavelet_polygon(const EllipseParams& p, Point2 center, double dt, int n_theta,
                                 double time_minutes = 0.0) {
  return FireFront(wavelet_ring(p, center, dt, n_theta), time_minutes);
}

/// Worst-case radial gap between an inscribed n-gon and a circle of `radius`.
inline double chord_tolerance(double radius, int n_theta) {
  return radius * (1.0 - std::cos(std::numbers::pi / n_theta));
}

}  // namespace firefront
