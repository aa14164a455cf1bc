#pragma once

// Polygon union and outer-boundary extraction, backed by Boost.Geometry.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"

namespace firefront {

namespace bg_types {
namespace bg = boost::geometry;
using Point = bg::model::d2::point_xy<double>;
using Polygon = bg::model::polygon<Point, /*ClockWise=*/false, /*Closed=*/true>;
using MultiPolygon = bg::model::multi_polygon<Polygon>;
}  // namespace bg_types

/// One connected piece of a union: outer ring (CCW, open) plus its hole count.
struct UnionComponent {
  Ring outer;
  std::size_t holes = 0;
  double area = 0.0;
};

namespace detail {

/// Rounds coordinates onto a lattice of pitch `tol` anchored at `anchor` and
/// drops repeated vertices. Returns an empty ring if it collapses.
inline Ring snap_ring(std::span<const Point2> ring, Point2 anchor, double tol) {
  Ring out;
  out.reserve(ring.size());
  for (Point2 p : ring) {
    Point2 s{anchor.x + std::round((p.x - anchor.x) / tol) * tol,
             anchor.y + std::round((p.y - anchor.y) / tol) * tol};
    if (out.empty() || !(out.back() == s)) out.push_back(s);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  if (out.size() < 3 || !(signed_area(out) > 0.0)) return {};
  return out;
}

inline bg_types::Polygon to_bg(std::span<const Point2> ring) {
  bg_types::Polygon poly;
  auto& outer = poly.outer();
  outer.reserve(ring.size() + 1);
  for (Point2 p : ring) outer.emplace_back(p.x, p.y);
  outer.emplace_back(ring.front().x, ring.front().y);
  return poly;
}

inline Ring from_bg(const bg_types::Polygon::ring_type& ring) {
  Ring out;
  out.reserve(ring.size());
  for (const auto& p : ring) {
    Point2 q{p.x(), p.y()};
    if (out.empty() || !(out.back() == q)) out.push_back(q);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

/// Removes vertices where the boundary doubles back on itself (zero-width spikes)
/// and exactly collinear interior vertices.
inline Ring drop_degenerate_vertices(Ring ring) {
  bool changed = true;
  while (changed && ring.size() > 3) {
    changed = false;
    Ring out;
    out.reserve(ring.size());
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 prev = out.empty() ? ring[(i + n - 1) % n] : out.back();
      const Point2 cur = ring[i], next = ring[(i + 1) % n];
      if (cross(cur - prev, next - cur) == 0.0) {
        changed = true;
        continue;
      }
      out.push_back(cur);
    }
    if (out.size() < 3) break;
    ring = std::move(out);
  }
  return ring;
}

}  // namespace detail

/// Union of CCW rings. Inputs are snapped to a lattice of pitch
/// `snap_fraction * bbox diagonal` first to avoid sliver artifacts.
/// Components come back sorted by decreasing area.
inline std::vector<UnionComponent> union_rings(const std::vector<Ring>& rings, double snap_fraction = 1e-9) {
  namespace bg = boost::geometry;
  using bg_types::MultiPolygon;

  std::vector<Point2> all;
  for (const Ring& r : rings) all.insert(all.end(), r.begin(), r.end());
  if (all.empty()) return {};
  const Box box = bounding_box(all);
  const double tol = std::max(snap_fraction * box.diagonal(), 1e-300);

  std::vector<MultiPolygon> level;
  level.reserve(rings.size());
  for (const Ring& r : rings) {
    Ring s = detail::snap_ring(r, box.lo, tol);
    if (s.empty()) continue;
    MultiPolygon mp;
    mp.push_back(detail::to_bg(s));
    bg::correct(mp);
    level.push_back(std::move(mp));
  }
  if (level.empty()) return {};

  // Balanced pairwise reduction keeps intermediate results small.
  while (level.size() > 1) {
    std::vector<MultiPolygon> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      MultiPolygon merged;
      bg::union_(level[i], level[i + 1], merged);
      next.push_back(std::move(merged));
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }

  std::vector<UnionComponent> out;
  for (const auto& poly : level.front()) {
    UnionComponent c;
    c.outer = detail::drop_degenerate_vertices(detail::from_bg(poly.outer()));
    if (c.outer.size() < 3) continue;
    if (signed_area(c.outer) < 0.0) std::reverse(c.outer.begin(), c.outer.end());
    c.area = signed_area(c.outer);
    if (!(c.area > 0.0)) continue;
    c.holes = poly.inners().size();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const UnionComponent& l, const UnionComponent& r) { return l.area > r.area; });
  return out;
}

}  // namespace firefront
