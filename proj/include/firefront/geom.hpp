#pragma once

// Planar geometry shared by every module. Coordinates are meters in a local
// tangent plane (x east, y north); angles are radians counterclockwise from +x.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "firefront/error.hpp"

namespace firefront {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Direction in the plane, normalized to [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;

  static Angle from_radians(double rad) { return Angle(normalize(rad)); }
  static Angle from_degrees(double deg) { return from_radians(deg * std::numbers::pi / 180.0); }
  static Angle of(Point2 direction) { return from_radians(std::atan2(direction.y, direction.x)); }

  constexpr double radians() const { return rad_; }
  double degrees() const { return rad_ * 180.0 / std::numbers::pi; }
  Point2 unit() const { return {std::cos(rad_), std::sin(rad_)}; }

  friend Angle operator+(Angle a, Angle b) { return from_radians(a.rad_ + b.rad_); }
  friend Angle operator-(Angle a, Angle b) { return from_radians(a.rad_ - b.rad_); }
  friend constexpr bool operator==(Angle, Angle) = default;

  /// Smallest absolute angular separation, in [0, pi].
  static double separation(Angle a, Angle b) {
    double d = std::fabs(a.rad_ - b.rad_);
    return std::min(d, kTwoPi - d);
  }

 private:
  explicit constexpr Angle(double rad) : rad_(rad) {}

  static double normalize(double rad) {
    if (!std::isfinite(rad)) throw ValidationError("angle must be finite");
    double r = std::fmod(rad, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a value just below 0 can round up to exactly 2pi
    if (r >= kTwoPi) r = 0.0;
    return r;
  }

  double rad_ = 0.0;
};

using Ring = std::vector<Point2>;

/// Shoelace signed area; positive for counterclockwise rings. Closure is implicit.
inline double signed_area(std::span<const Point2> ring) {
  if (ring.size() < 3) throw DegenerateInputError("polygon needs at least 3 vertices");
  // Shift to the first vertex to limit cancellation on large coordinates.
  const Point2 o = ring[0];
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) twice += cross(ring[i] - o, ring[i + 1] - o);
  return 0.5 * twice;
}

inline double perimeter(std::span<const Point2> ring) {
  double p = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) p += distance(ring[i], ring[(i + 1) % ring.size()]);
  return p;
}

/// Area centroid of a simple polygon.
inline Point2 centroid(std::span<const Point2> ring) {
  const double area = signed_area(ring);
  if (area == 0.0) throw DegenerateInputError("zero-area polygon has no centroid");
  const Point2 o = ring[0];
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Point2 a = ring[i] - o;
    Point2 b = ring[(i + 1) % ring.size()] - o;
    double w = cross(a, b);
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  return o + Point2{cx / (6.0 * area), cy / (6.0 * area)};
}

struct Box {
  Point2 lo{};
  Point2 hi{};
  double diagonal() const { return distance(lo, hi); }
};

inline Box bounding_box(std::span<const Point2> pts) {
  Box b{pts.front(), pts.front()};
  for (Point2 p : pts) {
    b.lo = {std::min(b.lo.x, p.x), std::min(b.lo.y, p.y)};
    b.hi = {std::max(b.hi.x, p.x), std::max(b.hi.y, p.y)};
  }
  return b;
}

inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

namespace detail {

inline int orientation_sign(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

inline bool on_segment_collinear(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace detail

/// Closed-segment intersection test (touching counts).
inline bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  using detail::on_segment_collinear;
  using detail::orientation_sign;
  const int o1 = orientation_sign(p1, p2, q1);
  const int o2 = orientation_sign(p1, p2, q2);
  const int o3 = orientation_sign(q1, q2, p1);
  const int o4 = orientation_sign(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment_collinear(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment_collinear(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment_collinear(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment_collinear(q1, q2, p2)) return true;
  return false;
}

/// True when no two non-adjacent edges touch and adjacent edges meet only at
/// their shared vertex. Sweep over x-sorted edge extents.
inline bool is_simple(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (ring[i] == ring[(i + 1) % n]) return false;

  struct Edge {
    double xmin, xmax;
    std::size_t i;
  };
  std::vector<Edge> edges(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = ring[i], b = ring[(i + 1) % n];
    edges[i] = {std::min(a.x, b.x), std::max(a.x, b.x), i};
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) { return l.xmin < r.xmin; });

  std::vector<const Edge*> active;
  for (const Edge& e : edges) {
    std::erase_if(active, [&](const Edge* a) { return a->xmax < e.xmin; });
    const Point2 a1 = ring[e.i], a2 = ring[(e.i + 1) % n];
    for (const Edge* other : active) {
      const std::size_t i = std::min(e.i, other->i), j = std::max(e.i, other->i);
      const Point2 b1 = ring[other->i], b2 = ring[(other->i + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex is fine; overlap along a common line is not.
        const Point2 shared = (j == i + 1) ? ring[j] : ring[0];
        const Point2 u = (a1 == shared ? a2 : a1) - shared;
        const Point2 v = (b1 == shared ? b2 : b1) - shared;
        if (cross(u, v) == 0.0 && dot(u, v) > 0.0) return false;
        continue;
      }
      if (segments_intersect(a1, a2, b1, b2)) return false;
    }
    active.push_back(&e);
  }
  return true;
}

/// Even-odd containment with the boundary counted as inside.
inline bool point_in_polygon(Point2 p, std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  const Box box = bounding_box(ring);
  const double tol = 1e-12 * std::max({1.0, box.diagonal(), std::fabs(p.x), std::fabs(p.y)});
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[j], b = ring[i];
    if (point_segment_distance(p, a, b) <= tol) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

/// Closed, simple, counterclockwise polygon with a timestamp (minutes since
/// the scenario epoch). The closing vertex is implicit.
class FireFront {
 public:
  FireFront(Ring vertices, double time_minutes) : vertices_(std::move(vertices)), time_(time_minutes) {
    if (vertices_.size() >= 2 && vertices_.front() == vertices_.back()) vertices_.pop_back();
    validate();
  }

  /// Accepts either orientation and an optional repeated closing vertex.
  static FireFront from_ring(Ring vertices, double time_minutes) {
    if (vertices.size() >= 2 && vertices.front() == vertices.back()) vertices.pop_back();
    if (vertices.size() >= 3 && signed_area(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());
    return FireFront(std::move(vertices), time_minutes);
  }

  std::span<const Point2> vertices() const { return vertices_; }
  const Ring& ring() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  double time() const { return time_; }
  double area() const { return signed_area(vertices_); }
  double perimeter() const { return firefront::perimeter(vertices_); }
  Point2 centroid() const { return firefront::centroid(vertices_); }
  bool contains(Point2 p) const { return point_in_polygon(p, vertices_); }

  FireFront with_time(double t) const {
    FireFront f = *this;
    f.time_ = t;
    return f;
  }

 private:
  void validate() const {
    if (vertices_.size() < 3) throw DegenerateInputError("fire front needs at least 3 vertices");
    for (Point2 p : vertices_)
      if (!p.finite()) throw ValidationError("fire front has a non-finite coordinate");
    if (!(signed_area(vertices_) > 0.0))
      throw DegenerateInputError("fire front must be counterclockwise with positive area");
    if (!is_simple(vertices_)) throw DegenerateInputError("fire front is not a simple polygon");
  }

  Ring vertices_;
  double time_ = 0.0;
};

/// Regular grid of scalars. `origin` is the lower-left corner of the grid;
/// values are row-major with row 0 the northernmost row (ESRI ASCII order).
class ScalarGrid {
 public:
  ScalarGrid(Point2 origin, double cell_size, std::size_t ncols, std::size_t nrows,
             std::vector<double> values, double nodata)
      : origin_(origin), cell_size_(cell_size), ncols_(ncols), nrows_(nrows),
        values_(std::move(values)), nodata_(nodata) {
    if (!(cell_size_ > 0.0)) throw ValidationError("grid cell_size must be positive");
    if (ncols_ == 0 || nrows_ == 0) throw ValidationError("grid must have at least one cell");
    if (values_.size() != ncols_ * nrows_)
      throw ValidationError("grid has " + std::to_string(values_.size()) + " values, expected " +
                            std::to_string(ncols_ * nrows_));
  }

  static ScalarGrid constant(Point2 origin, double cell_size, std::size_t ncols, std::size_t nrows,
                             double value, double nodata = -9999.0) {
    return ScalarGrid(origin, cell_size, ncols, nrows, std::vector<double>(ncols * nrows, value), nodata);
  }

  Point2 origin() const { return origin_; }
  double cell_size() const { return cell_size_; }
  std::size_t ncols() const { return ncols_; }
  std::size_t nrows() const { return nrows_; }
  double nodata() const { return nodata_; }
  std::span<const double> values() const { return values_; }

  double at(std::size_t col, std::size_t row) const { return values_[row * ncols_ + col]; }
  bool is_nodata(double v) const { return std::isnan(v) || v == nodata_; }

  Point2 cell_center(std::size_t col, std::size_t row) const {
    return {origin_.x + (static_cast<double>(col) + 0.5) * cell_size_,
            origin_.y + (static_cast<double>(nrows_ - row) - 0.5) * cell_size_};
  }

 private:
  Point2 origin_;
  double cell_size_;
  std::size_t ncols_;
  std::size_t nrows_;
  std::vector<double> values_;
  double nodata_;
};

/// Bilinear interpolation between the four surrounding cell centers.
/// Empty when p lies outside the hull of cell centers or touches a nodata cell.
inline std::optional<double> sample_grid(const ScalarGrid& grid, Point2 p) {
  if (!p.finite()) return std::nullopt;
  const double cs = grid.cell_size();
  // u runs east across columns, w runs north across rows (w = 0 is the southern row).
  const double u = (p.x - grid.origin().x) / cs - 0.5;
  const double w = (p.y - grid.origin().y) / cs - 0.5;
  const auto nc = static_cast<double>(grid.ncols() - 1);
  const auto nr = static_cast<double>(grid.nrows() - 1);
  if (u < 0.0 || w < 0.0 || u > nc || w > nr) return std::nullopt;

  const auto i0 = std::min(static_cast<std::size_t>(u), grid.ncols() > 1 ? grid.ncols() - 2 : 0);
  const auto j0 = std::min(static_cast<std::size_t>(w), grid.nrows() > 1 ? grid.nrows() - 2 : 0);
  const std::size_t i1 = std::min(i0 + 1, grid.ncols() - 1);
  const std::size_t j1 = std::min(j0 + 1, grid.nrows() - 1);
  const double fu = u - static_cast<double>(i0);
  const double fw = w - static_cast<double>(j0);

  auto value = [&](std::size_t i, std::size_t j) { return grid.at(i, grid.nrows() - 1 - j); };
  const std::size_t is[4] = {i0, i1, i0, i1};
  const std::size_t js[4] = {j0, j0, j1, j1};
  const double weights[4] = {(1 - fu) * (1 - fw), fu * (1 - fw), (1 - fu) * fw, fu * fw};
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (weights[k] == 0.0) continue;  // cells with no weight do not contribute, nodata or not
    const double v = value(is[k], js[k]);
    if (grid.is_nodata(v)) return std::nullopt;
    sum += weights[k] * v;
  }
  return sum;
}

/// Points along the closed ring at spacing <= step, vertices included.
inline std::vector<Point2> densify(std::span<const Point2> ring, double step) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 a = ring[i], b = ring[(i + 1) % ring.size()];
    const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(distance(a, b) / step)));
    for (std::size_t k = 0; k < pieces; ++k) out.push_back(a + (static_cast<double>(k) / pieces) * (b - a));
  }
  return out;
}

inline double distance_to_boundary(Point2 p, std::span<const Point2> ring) {
  double best = INFINITY;
  for (std::size_t i = 0; i < ring.size(); ++i)
    best = std::min(best, point_segment_distance(p, ring[i], ring[(i + 1) % ring.size()]));
  return best;
}

/// Symmetric Hausdorff distance between two closed boundaries, evaluated on
/// boundary samples spaced at most `step` apart (error <= step / 2).
inline double hausdorff_distance(std::span<const Point2> a, std::span<const Point2> b, double step) {
  double h = 0.0;
  for (Point2 p : densify(a, step)) h = std::max(h, distance_to_boundary(p, b));
  for (Point2 p : densify(b, step)) h = std::max(h, distance_to_boundary(p, a));
  return h;
}

/// max over vertices of <v, u>: the support function in direction `dir`.
inline double support(std::span<const Point2> pts, Angle dir) {
  const Point2 u = dir.unit();
  double best = -INFINITY;
  for (Point2 p : pts) best = std::max(best, dot(p, u));
  return best;
}

}  // namespace firefront
