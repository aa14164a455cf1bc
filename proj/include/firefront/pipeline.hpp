#pragma once

// Scenario runner: samples rates and environment on the current front,
// advances it (Huygens envelope or elliptical frames), and repeats.

#include <sstream>
#include <string>
#include <vector>

#include "firefront/frames.hpp"
#include "firefront/huygens.hpp"
#include "firefront/run_result.hpp"
#include "firefront/scenario.hpp"

namespace firefront {

namespace detail {

struct SampledForcing {
  VertexForcing forcing;
  bool stalled = false;
};

inline SampledForcing sample_forcing(const ForcingSpec& f, const ScenarioConfig& cfg, const Perturbation& pert,
                                     Point2 p, double t) {
  SampledForcing out;
  EnvSample& env = out.forcing.env;
  env.wind_speed = std::max(0.0, f.wind_speed->at(p, t, "wind_speed") * pert.wind_speed_scale + pert.wind_speed_offset);
  env.wind_dir = wind_toward(f.wind_dir->at(p, t, "wind_dir"), cfg.wind_convention) +
                 Angle::from_degrees(pert.wind_dir_offset_deg);
  if (f.spread_offset_deg) env.max_spread_dir = Angle::from_degrees(*f.spread_offset_deg);
  env.moisture = f.moisture ? f.moisture->at(p, t, "moisture") : 0.0;
  if (env.moisture >= cfg.m_min) {
    out.stalled = true;
    return out;
  }
  RosPair ros;
  if (f.mode == RateMode::explicit_rates) {
    ros = {f.head->at(p, t, "head rate"), f.back->at(p, t, "back rate")};
  } else {
    ros = {correct_ros(*cfg.sat_head, cfg.ros_model.head, env.wind_speed, env.moisture),
           correct_ros(*cfg.sat_back, cfg.ros_model.back, env.wind_speed, env.moisture)};
  }
  ros.head *= pert.head_scale;
  ros.back *= pert.back_scale;
  if (!std::isfinite(ros.head) || !std::isfinite(ros.back) || ros.head < 0.0 || ros.back < 0.0) {
    std::ostringstream msg;
    msg << "rates at (" << p.x << ", " << p.y << ") are invalid: head " << ros.head << ", back " << ros.back;
    throw SimulationError(msg.str());
  }
  out.forcing.ros = ros;
  out.stalled = !ros.burning();
  return out;
}

inline StepDiagnostics huygens_step(const ScenarioConfig& cfg, const StepSpec& spec, const Perturbation& pert,
                                    std::size_t k, std::vector<FireFront>& fronts, bool& back_exceeds_head) {
  const double t = fronts.back().time();
  PropagationStep step;
  step.dt = spec.dt;
  step.n_theta = cfg.n_theta;
  step.resample_spacing = cfg.resample_spacing;
  step.flank = cfg.flank;
  step.max_sources = cfg.max_sources;
  ForcingField field = [&](Point2 p) {
    SampledForcing s = sample_forcing(spec.forcing, cfg, pert, p, t);
    if (s.forcing.ros.back > s.forcing.ros.head) back_exceeds_head = true;
    return s.forcing;
  };
  PropagationResult r = propagate_once_detailed(fronts.back(), step, field);
  StepDiagnostics d;
  d.step = k;
  d.time = r.front.time();
  d.dt = spec.dt;
  d.mean_head = r.stats.mean_head;
  d.mean_back = r.stats.mean_back;
  d.sources = r.stats.sources;
  d.stalled = r.stats.stalled;
  d.area = r.front.area();
  if (d.stalled < d.sources) fronts.push_back(std::move(r.front));
  return d;
}

inline StepDiagnostics frames_step(const ScenarioConfig& cfg, const StepSpec& spec, const Perturbation& pert,
                                   std::size_t k, std::vector<FireFront>& fronts, bool& back_exceeds_head) {
  const double t = fronts.back().time();
  StepDiagnostics d;
  d.step = k;
  d.dt = spec.dt;
  d.time = t + spec.dt;
  std::vector<FireFront> built;
  for (const auto& fa : spec.frames) {
    ++d.sources;
    SampledForcing s = sample_forcing(fa.forcing, cfg, pert, fa.anchor, t);
    if (s.stalled) {
      ++d.stalled;
      continue;
    }
    if (s.forcing.ros.back > s.forcing.ros.head) back_exceeds_head = true;
    d.mean_head += s.forcing.ros.head;
    d.mean_back += s.forcing.ros.back;
    FrameSpec frame{fa.anchor, s.forcing.ros, s.forcing.env, fa.duration.value_or(spec.dt)};
    built.push_back(build_frame(frame, cfg.n_theta, cfg.flank, d.time));
  }
  if (built.empty()) return d;
  d.mean_head /= static_cast<double>(built.size());
  d.mean_back /= static_cast<double>(built.size());
  std::optional<FireFront> previous;
  if (cfg.chain_previous) previous = fronts.back();
  fronts.push_back(enclose_frames(built, previous, d.time));
  d.area = fronts.back().area();
  return d;
}

}  // namespace detail

/// Runs every step. Errors carry the 1-based step index; validation problems
/// stay ValidationError, everything else becomes SimulationError. If every
/// source of a step is at or above the moisture cutoff the run stops with
/// status extinguished and the fronts computed so far.
inline RunResult run_scenario(const ScenarioConfig& cfg, const Perturbation& pert = {}) {
  cfg.validate();
  RunResult result;
  result.fronts.push_back(cfg.initial_front);
  for (const auto& note : cfg.notes) result.warnings.push_back(note);
  for (std::size_t k = 1; k <= cfg.steps.size(); ++k) {
    const StepSpec& spec = cfg.steps[k - 1];
    const std::string where = "step " + std::to_string(k) + " (" +
                              (cfg.strategy == Strategy::huygens ? "huygens_propagator" : "frame_enclosure") + "): ";
    bool back_exceeds_head = false;
    StepDiagnostics d;
    try {
      d = cfg.strategy == Strategy::huygens
              ? detail::huygens_step(cfg, spec, pert, k, result.fronts, back_exceeds_head)
              : detail::frames_step(cfg, spec, pert, k, result.fronts, back_exceeds_head);
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    } catch (const std::exception& e) {
      throw SimulationError(where + e.what());
    }
    if (back_exceeds_head) result.warnings.push_back(where + "back rate exceeds head rate at some sources");
    result.steps.push_back(d);
    if (d.stalled == d.sources) {
      result.status = RunStatus::extinguished;
      result.warnings.push_back(where + "fire extinguished: moisture at or above m_min everywhere on the front");
      break;
    }
  }
  return result;
}

struct SweepResult {
  std::vector<std::string> names;  ///< names[0] is the unperturbed base run
  std::vector<RunResult> runs;
  std::vector<std::vector<double>> distance;  ///< symmetric Hausdorff distance between final fronts, m
};

/// Base run plus one run per perturbation. `step` is the boundary sampling
/// spacing for the distance; empty = 1/1000 of the base final front's extent.
inline SweepResult sensitivity_sweep(const ScenarioConfig& cfg, const std::vector<Perturbation>& perturbations,
                                     std::optional<double> step = std::nullopt) {
  SweepResult out;
  out.names.push_back("base");
  out.runs.push_back(run_scenario(cfg));
  for (const auto& p : perturbations) {
    try {
      out.runs.push_back(run_scenario(cfg, p));
    } catch (const ValidationError& e) {
      throw ValidationError("perturbation '" + p.name + "': " + e.what());
    } catch (const std::exception& e) {
      throw SimulationError("perturbation '" + p.name + "': " + e.what());
    }
    out.names.push_back(p.name);
  }
  const FireFront& base_final = out.runs.front().fronts.back();
  const double h = step.value_or(std::max(bounding_box(base_final.vertices()).diagonal() / 1000.0, 1e-6));
  const std::size_t n = out.runs.size();
  out.distance.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = hausdorff_distance(out.runs[i].fronts.back().vertices(), out.runs[j].fronts.back().vertices(), h);
      out.distance[i][j] = out.distance[j][i] = d;
    }
  return out;
}

}  // namespace firefront
