#pragma once

// Fire fronts from hotspot detections, and directional thermal rates of
// spread R^T(theta) = d(theta) / dt between two consecutive fronts.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"
#include "firefront/polygon_union.hpp"

namespace firefront {

struct HotspotRecord {
  Point2 position;
  double time = 0.0;  ///< minutes since scenario epoch
  std::optional<double> frp;  ///< MW
  std::optional<std::string> confidence;
  double lon = 0.0;
  double lat = 0.0;
};

/// Convex hull (default) or alpha shape with the given circumradius bound.
struct HullSelector {
  std::optional<double> alpha_radius;

  static HullSelector convex() { return {}; }
  static HullSelector alpha(double radius) { return {radius}; }
};

/// Andrew's monotone chain; CCW, collinear points dropped.
inline Ring convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Ring hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

struct Triangle {
  std::array<std::size_t, 3> v;
};

/// Bowyer-Watson Delaunay triangulation (quadratic; meant for hotspot-sized inputs).
/// Returned triangles index into `pts` and are counterclockwise.
inline std::vector<Triangle> delaunay(const std::vector<Point2>& input) {
  std::vector<Point2> pts = input;
  const std::size_t n = pts.size();
  if (n < 3) return {};
  const Box box = bounding_box(pts);
  const Point2 mid = 0.5 * (box.lo + box.hi);
  const double span = std::max(box.diagonal(), 1.0) * 20.0;
  pts.push_back(mid + Point2{-span, -span});
  pts.push_back(mid + Point2{span, -span});
  pts.push_back(mid + Point2{0.0, span});

  struct Tri {
    std::array<std::size_t, 3> v;
    Point2 cc;
    double r2;
  };
  auto make = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (cross(pts[b] - pts[a], pts[c] - pts[a]) < 0) std::swap(b, c);
    const Point2 A = pts[a], B = pts[b] - A, C = pts[c] - A;
    const double d = 2.0 * cross(B, C);
    const double b2 = dot(B, B), c2 = dot(C, C);
    Point2 cc{(C.y * b2 - B.y * c2) / d, (B.x * c2 - C.x * b2) / d};
    return Tri{{a, b, c}, A + cc, dot(cc, cc)};
  };

  std::vector<Tri> tris{make(n, n + 1, n + 2)};
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = pts[i];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Tri> keep;
    keep.reserve(tris.size());
    for (const Tri& t : tris) {
      const Point2 d = p - t.cc;
      if (dot(d, d) < t.r2 * (1.0 + 1e-12)) {
        for (int e = 0; e < 3; ++e) edges.emplace_back(t.v[e], t.v[(e + 1) % 3]);
      } else {
        keep.push_back(t);
      }
    }
    // Cavity boundary: edges that appear once.
    for (std::size_t a = 0; a < edges.size(); ++a) {
      bool shared = false;
      for (std::size_t b = 0; b < edges.size(); ++b)
        if (a != b && edges[a].first == edges[b].second && edges[a].second == edges[b].first) {
          shared = true;
          break;
        }
      if (!shared) {
        const Point2 e0 = pts[edges[a].first], e1 = pts[edges[a].second];
        if (cross(e1 - e0, p - e0) != 0.0) keep.push_back(make(edges[a].first, edges[a].second, i));
      }
    }
    tris = std::move(keep);
  }
  std::vector<Triangle> out;
  for (const Tri& t : tris)
    if (t.v[0] < n && t.v[1] < n && t.v[2] < n) out.push_back({t.v});
  return out;
}

inline double circumradius(Point2 a, Point2 b, Point2 c) {
  const double la = distance(b, c), lb = distance(a, c), lc = distance(a, b);
  const double twice_area = std::fabs(cross(b - a, c - a));
  if (twice_area == 0.0) return INFINITY;
  return la * lb * lc / (2.0 * twice_area);
}

/// Outer boundary of the union of Delaunay triangles with circumradius <= alpha.
/// Disconnected pieces other than the largest are dropped.
inline Ring alpha_shape(const std::vector<Point2>& pts, double alpha) {
  if (!(alpha > 0.0)) throw ValidationError("alpha radius must be positive");
  std::vector<Point2> unique = pts;
  std::sort(unique.begin(), unique.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<Ring> kept;
  for (const Triangle& t : delaunay(unique)) {
    const Point2 a = unique[t.v[0]], b = unique[t.v[1]], c = unique[t.v[2]];
    if (circumradius(a, b, c) <= alpha) kept.push_back({a, b, c});
  }
  if (kept.empty()) throw DegenerateInputError("alpha radius too small: no triangle survives");
  auto comps = union_rings(kept);
  if (comps.empty()) throw DegenerateInputError("alpha shape is empty");
  return std::move(comps.front().outer);
}

inline FireFront front_from_hotspots(const std::vector<HotspotRecord>& records, const HullSelector& method,
                                     double time_minutes) {
  if (records.size() < 3) throw DegenerateInputError("need at least 3 hotspots to outline a front, got " +
                                                     std::to_string(records.size()));
  std::vector<Point2> pts;
  pts.reserve(records.size());
  for (const auto& r : records) pts.push_back(r.position);
  Ring hull = convex_hull(pts);
  if (hull.size() < 3 || !(signed_area(hull) > 0.0)) throw DegenerateInputError("hotspots are collinear");
  if (method.alpha_radius) hull = alpha_shape(pts, *method.alpha_radius);
  return FireFront(std::move(hull), time_minutes);
}

/// Farthest intersection of the ray origin + t u(theta), t >= 0, with the ring.
inline double ray_exit_distance(Point2 origin, Angle theta, std::span<const Point2> ring) {
  const Point2 u = theta.unit();
  double best = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 a = ring[i], b = ring[(i + 1) % ring.size()];
    const Point2 e = b - a;
    const double denom = cross(u, e);
    if (denom == 0.0) {
      // Parallel edge: only counts if collinear with the ray.
      if (cross(a - origin, u) == 0.0) best = std::max({best, dot(a - origin, u), dot(b - origin, u)});
      continue;
    }
    const Point2 w = a - origin;
    const double t = cross(w, e) / denom;
    const double s = cross(w, u) / denom;
    // Rays through a vertex must not slip between the two adjacent edges.
    constexpr double kEdgeSlack = 1e-12;
    if (t >= 0.0 && s >= -kEdgeSlack && s <= 1.0 + kEdgeSlack) best = std::max(best, t);
  }
  return best;
}

struct BinnedValue {
  Angle angle;
  double value = 0.0;
};

/// d(theta): growth in the farthest ray-cast distance from `origin` between
/// the two fronts, per angular bin, clamped at zero.
inline std::vector<BinnedValue> directional_displacement(const FireFront& earlier, const FireFront& later, int n_bins,
                                                         Point2 origin) {
  if (n_bins < 4) throw ValidationError("need at least 4 angular bins");
  if (!earlier.contains(origin)) throw ValidationError("displacement origin lies outside the earlier front");
  std::vector<BinnedValue> out;
  out.reserve(static_cast<std::size_t>(n_bins));
  for (int k = 0; k < n_bins; ++k) {
    const Angle theta = Angle::from_radians(kTwoPi * k / n_bins);
    const double d = ray_exit_distance(origin, theta, later.vertices()) -
                     ray_exit_distance(origin, theta, earlier.vertices());
    out.push_back({theta, std::max(0.0, d)});
  }
  return out;
}

struct DirectionalRosProfile {
  std::vector<Angle> angles;
  std::vector<double> rates;  ///< m/min
  BinnedValue head;           ///< fastest bin
  BinnedValue back;           ///< bin opposite the head
  std::size_t head_bin = 0;
};

inline DirectionalRosProfile thermal_ros(const FireFront& earlier, const FireFront& later, double dt, int n_bins = 72,
                                         std::optional<Point2> origin = std::nullopt) {
  if (!(dt > 0.0)) throw ValidationError("time between fronts must be positive");
  if (n_bins % 2 != 0) throw ValidationError("n_bins must be even so the back bin is exactly opposite the head");
  const auto disp = directional_displacement(earlier, later, n_bins, origin.value_or(earlier.centroid()));
  DirectionalRosProfile p;
  for (const auto& b : disp) {
    p.angles.push_back(b.angle);
    p.rates.push_back(b.value / dt);
  }
  p.head_bin = static_cast<std::size_t>(std::max_element(p.rates.begin(), p.rates.end()) - p.rates.begin());
  const std::size_t back_bin = (p.head_bin + static_cast<std::size_t>(n_bins) / 2) % static_cast<std::size_t>(n_bins);
  p.head = {p.angles[p.head_bin], p.rates[p.head_bin]};
  p.back = {p.angles[back_bin], p.rates[back_bin]};
  return p;
}

/// Acquisition-time bucket: timestamps are rounded to the nearest multiple of `window`.
inline long long time_bucket(double minutes, double window) {
  if (!(window > 0.0)) throw ValidationError("grouping window must be positive");
  return std::llround(minutes / window);
}

/// Hotspots detected up to (and in the same bucket as) time t: the burned
/// area accumulates over the series.
inline std::vector<HotspotRecord> snapshot_at(const std::vector<HotspotRecord>& records, double t, double window = 15.0) {
  const long long cutoff = time_bucket(t, window);
  std::vector<HotspotRecord> out;
  for (const auto& r : records)
    if (time_bucket(r.time, window) <= cutoff) out.push_back(r);
  return out;
}

}  // namespace firefront
