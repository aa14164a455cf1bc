#pragma once

// Discrete Huygens propagation: each (resampled) front vertex emits an
// anisotropic wavelet r(theta) dt; the next front is the outer boundary of the
// union of the current front and every wavelet.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"
#include "firefront/polygon_union.hpp"
#include "firefront/ros_kernel.hpp"

namespace firefront {

/// Rates and environment driving one vertex's wavelet.
struct VertexForcing {
  RosPair ros;
  EnvSample env;
};

/// Forcing as a function of position, sampled at step start.
using ForcingField = std::function<VertexForcing(Point2)>;

inline ForcingField constant_forcing(VertexForcing f) {
  return [f](Point2) { return f; };
}

struct PropagationStep {
  double dt = 60.0;  ///< minutes
  int n_theta = 128;
  /// Maximum spacing between wavelet sources. Empty = min(R_B dt) / 4.
  std::optional<double> resample_spacing;
  FlankModel flank = FlankModel::length_to_breadth;
  double snap_fraction = 1e-9;
  /// Upper bound on wavelet sources per step; spacing is widened to respect it.
  std::size_t max_sources = 4096;

  void validate() const {
    if (!(dt > 0.0)) throw ValidationError("propagation dt must be positive");
    if (n_theta < 16) throw ValidationError("n_theta must be >= 16");
    if (resample_spacing && !(*resample_spacing > 0.0)) throw ValidationError("resample_spacing must be positive");
  }
};

/// Subdivides every edge longer than `spacing` into equal pieces; original
/// vertices are kept, so the shape is unchanged.
inline FireFront resample_front(const FireFront& front, double spacing) {
  if (!(spacing > 0.0)) throw ValidationError("resample spacing must be positive");
  const auto& v = front.ring();
  Ring out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i], b = v[(i + 1) % v.size()];
    const double len = distance(a, b);
    const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / spacing - 1e-12)));
    for (std::size_t k = 0; k < pieces; ++k) out.push_back(a + (static_cast<double>(k) / pieces) * (b - a));
  }
  return FireFront(std::move(out), front.time());
}

struct StepStats {
  std::size_t sources = 0;   ///< resampled vertices
  std::size_t stalled = 0;   ///< vertices with R_H = R_B = 0
  double mean_head = 0.0;    ///< over burning vertices
  double mean_back = 0.0;
  double spacing = 0.0;
  std::size_t discarded_holes = 0;
};

struct PropagationResult {
  FireFront front;
  StepStats stats;
};

/// Spacing used when the step does not pin one: a quarter of the smallest
/// backfire advance, widened so at most `max_sources` vertices are produced.
inline double default_spacing(const FireFront& front, const PropagationStep& step, const ForcingField& forcing) {
  double min_back = INFINITY;
  for (Point2 p : front.vertices()) {
    VertexForcing f = forcing(p);
    if (!f.ros.burning()) continue;
    const double slow = std::min(f.ros.head, f.ros.back);
    if (slow > 0.0) min_back = std::min(min_back, slow);
  }
  const double perim = front.perimeter();
  if (!std::isfinite(min_back)) return perim;
  return min_back * step.dt / 4.0;
}

inline PropagationResult propagate_once_detailed(const FireFront& front, const PropagationStep& step,
                                                 const ForcingField& forcing) {
  step.validate();
  double spacing = step.resample_spacing ? *step.resample_spacing : default_spacing(front, step, forcing);
  spacing = std::max(spacing, front.perimeter() / static_cast<double>(step.max_sources));
  const FireFront sources = resample_front(front, spacing);

  StepStats stats;
  stats.sources = sources.size();
  stats.spacing = spacing;

  std::vector<Ring> rings;
  rings.reserve(sources.size() + 1);
  rings.push_back(front.ring());
  std::size_t burning = 0;
  for (Point2 p : sources.vertices()) {
    const VertexForcing f = forcing(p);
    f.ros.validate();
    if (!f.ros.burning()) {
      ++stats.stalled;
      continue;
    }
    ++burning;
    stats.mean_head += f.ros.head;
    stats.mean_back += f.ros.back;
    const EllipseParams params = compute_abc(f.ros, f.env, step.flank);
    rings.push_back(wavelet_ring(params, p, step.dt, step.n_theta));
  }
  if (burning > 0) {
    stats.mean_head /= static_cast<double>(burning);
    stats.mean_back /= static_cast<double>(burning);
  }
  const double t_next = front.time() + step.dt;
  if (burning == 0) return {front.with_time(t_next), stats};

  auto components = union_rings(rings, step.snap_fraction);
  if (components.empty()) throw DegenerateInputError("wavelet union is empty");
  // Wavelets are centred on the front, so the union is connected; anything
  // else is snapping debris orders of magnitude smaller.
  stats.discarded_holes = components.front().holes;
  try {
    return {FireFront(std::move(components.front().outer), t_next), stats};
  } catch (const ValidationError& e) {
    throw SimulationError(std::string("envelope extraction produced an invalid front: ") + e.what());
  }
}

inline FireFront propagate_once(const FireFront& front, const PropagationStep& step, const ForcingField& forcing) {
  return propagate_once_detailed(front, step, forcing).front;
}

struct SequenceStep {
  PropagationStep step;
  ForcingField forcing;
};

/// Initial front plus one front per step.
inline std::vector<FireFront> propagate_sequence(const FireFront& initial, const std::vector<SequenceStep>& steps) {
  if (steps.empty()) throw ValidationError("steps must be non-empty");
  std::vector<FireFront> fronts{initial};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    try {
      fronts.push_back(propagate_once(fronts.back(), steps[k].step, steps[k].forcing));
    } catch (const std::exception& e) {
      throw SimulationError("propagation failed at step " + std::to_string(k) + " (front with " +
                            std::to_string(fronts.back().size()) + " vertices, area " +
                            std::to_string(fronts.back().area()) + " m2): " + e.what());
    }
  }
  return fronts;
}

}  // namespace firefront
