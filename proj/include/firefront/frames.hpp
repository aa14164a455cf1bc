#pragma once

// Elliptical-frame enclosure: one wavelet per representative anchor, scaled by
// the step duration; the burned region is the outer boundary of their union.

#include <optional>
#include <sstream>
#include <vector>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"
#include "firefront/polygon_union.hpp"
#include "firefront/ros_kernel.hpp"

namespace firefront {

struct FrameSpec {
  Point2 anchor;
  RosPair ros;
  EnvSample env;
  double duration = 0.0;  ///< minutes
};

inline FireFront build_frame(const FrameSpec& spec, int n_theta = 128,
                             FlankModel flank = FlankModel::length_to_breadth, double time_minutes = 0.0) {
  if (!(spec.duration > 0.0)) throw ValidationError("frame duration must be positive");
  return wavelet_polygon(compute_abc(spec.ros, spec.env, flank), spec.anchor, spec.duration, n_theta, time_minutes);
}

/// Union of the frames (and the previous region, if any). A disconnected
/// union is an error naming each component.
inline FireFront enclose_frames(const std::vector<FireFront>& frames, const std::optional<FireFront>& previous,
                                double time_minutes, double snap_fraction = 1e-9) {
  if (frames.empty()) throw ValidationError("enclose_frames needs at least one frame");
  std::vector<Ring> rings;
  rings.reserve(frames.size() + 1);
  if (previous) rings.push_back(previous->ring());
  for (const FireFront& f : frames) rings.push_back(f.ring());

  auto components = union_rings(rings, snap_fraction);
  if (components.empty()) throw DegenerateInputError("frame union is empty");
  if (components.size() > 1) {
    std::ostringstream msg;
    msg << "frames form " << components.size() << " disconnected regions; add bridging anchors. Components:";
    for (std::size_t i = 0; i < components.size(); ++i) {
      const Point2 c = centroid(components[i].outer);
      msg << " [" << i << ": area " << components[i].area << " m2, centroid (" << c.x << ", " << c.y << ")]";
    }
    throw ValidationError(msg.str());
  }
  return FireFront(std::move(components.front().outer), time_minutes);
}

}  // namespace firefront
