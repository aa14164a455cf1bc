#pragma once

// Spherical azimuthal-equidistant projection about a scenario center. Distances
// and azimuths from the center are exact on the sphere; good to well under a
// meter of distortion over fire-sized extents.

#include <cmath>
#include <numbers>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"

namespace firefront {

struct LonLat {
  double lon = 0.0;  ///< degrees east
  double lat = 0.0;  ///< degrees north
};

class LocalProjection {
 public:
  static constexpr double kEarthRadius = 6371008.8;  // mean radius, meters

  LocalProjection() = default;
  explicit LocalProjection(LonLat center) : center_(center) {
    if (!(center.lat >= -90.0 && center.lat <= 90.0) || !(center.lon >= -180.0 && center.lon <= 360.0))
      throw ValidationError("projection center out of range");
    lat0_ = rad(center.lat);
    lon0_ = rad(center.lon);
  }

  LonLat center() const { return center_; }

  Point2 forward(LonLat ll) const {
    const double phi = rad(ll.lat), dl = rad(ll.lon) - lon0_;
    const double xp = std::cos(phi) * std::sin(dl);
    const double yp = std::cos(lat0_) * std::sin(phi) - std::sin(lat0_) * std::cos(phi) * std::cos(dl);
    const double zp = std::sin(lat0_) * std::sin(phi) + std::cos(lat0_) * std::cos(phi) * std::cos(dl);
    const double rho = std::hypot(xp, yp);
    if (rho == 0.0) return {0.0, 0.0};
    const double c = std::atan2(rho, zp);
    return {kEarthRadius * c * xp / rho, kEarthRadius * c * yp / rho};
  }

  LonLat inverse(Point2 p) const {
    const double rho = std::hypot(p.x, p.y);
    if (rho == 0.0) return center_;
    const double c = rho / kEarthRadius;
    const double sc = std::sin(c), cc = std::cos(c);
    const double phi = std::asin(cc * std::sin(lat0_) + p.y * sc * std::cos(lat0_) / rho);
    const double lam = lon0_ + std::atan2(p.x * sc, rho * std::cos(lat0_) * cc - p.y * std::sin(lat0_) * sc);
    double lon = deg(lam);
    if (lon > 180.0) lon -= 360.0;
    if (lon < -180.0) lon += 360.0;
    return {lon, deg(phi)};
  }

 private:
  static double rad(double d) { return d * std::numbers::pi / 180.0; }
  static double deg(double r) { return r * 180.0 / std::numbers::pi; }

  LonLat center_{};
  double lat0_ = 0.0;
  double lon0_ = 0.0;
};

}  // namespace firefront
