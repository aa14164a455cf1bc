#pragma once

// Scenario configuration: the JSON document a run is driven by, resolved into
// sampled fields over the local plane. See docs/config.md for the schema.

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "firefront/error.hpp"
#include "firefront/expression.hpp"
#include "firefront/front_tracking.hpp"
#include "firefront/geom.hpp"
#include "firefront/io/ascii_grid.hpp"
#include "firefront/io/calibration_csv.hpp"
#include "firefront/io/geojson.hpp"
#include "firefront/io/hotspots.hpp"
#include "firefront/io/time.hpp"
#include "firefront/lfmc.hpp"
#include "firefront/projection.hpp"
#include "firefront/ros_correction.hpp"
#include "firefront/ros_kernel.hpp"

namespace firefront {

enum class Strategy { huygens, frames };
/// meteorological_from: compass bearing the wind blows from (clockwise from north).
/// compass_toward: compass bearing the fire is pushed toward.
/// math_toward: counterclockwise from east, direction the fire is pushed toward.
enum class WindConvention { meteorological_from, compass_toward, math_toward };

inline Strategy parse_strategy(const std::string& s) {
  if (s == "huygens") return Strategy::huygens;
  if (s == "frames") return Strategy::frames;
  throw ValidationError("unknown strategy '" + s + "' (expected huygens or frames)");
}

/// Wind direction in degrees under `conv` -> direction the fire is pushed toward.
inline Angle wind_toward(double degrees, WindConvention conv) {
  switch (conv) {
    case WindConvention::math_toward: return Angle::from_degrees(degrees);
    case WindConvention::compass_toward: return Angle::from_degrees(90.0 - degrees);
    case WindConvention::meteorological_from: break;
  }
  return Angle::from_degrees(270.0 - degrees);
}

/// Plane coordinates as seen by rate expressions: x = X / unit + x_offset.
struct ExpressionFrame {
  double unit_m = 1.0;
  double x_offset = 0.0;
  double y_offset = 0.0;
};

/// A scalar over (position, time). Empty optional means "no data here".
struct ScalarField {
  std::function<std::optional<double>(Point2, double)> eval;
  std::string source;  ///< for messages

  static ScalarField constant(double v) {
    return {[v](Point2, double) { return std::optional<double>(v); }, std::to_string(v)};
  }

  double at(Point2 p, double t, const char* what) const {
    if (auto v = eval(p, t)) return *v;
    std::ostringstream msg;
    msg << what << " (" << source << ") has no data at (" << p.x << ", " << p.y << ")";
    throw SimulationError(msg.str());
  }
};

enum class RateMode { explicit_rates, corrected };

/// Everything needed to sample head/back rates and environment at a point.
struct ForcingSpec {
  RateMode mode = RateMode::explicit_rates;
  std::optional<ScalarField> head;  ///< explicit mode
  std::optional<ScalarField> back;
  std::optional<ScalarField> wind_speed;
  std::optional<ScalarField> wind_dir;  ///< degrees, in the scenario's convention
  std::optional<ScalarField> moisture;  ///< percent; absent = 0
  std::optional<double> spread_offset_deg;
};

struct FrameAnchorSpec {
  Point2 anchor;
  ForcingSpec forcing;
  std::optional<double> duration;  ///< defaults to the step dt
};

struct StepSpec {
  double dt = 60.0;
  ForcingSpec forcing;
  std::vector<FrameAnchorSpec> frames;
};

/// Parameter deltas for a sensitivity run.
struct Perturbation {
  std::string name = "base";
  double wind_dir_offset_deg = 0.0;  ///< added counterclockwise after convention conversion
  double wind_speed_scale = 1.0;
  double wind_speed_offset = 0.0;
  double head_scale = 1.0;
  double back_scale = 1.0;
};

struct ScenarioConfig {
  std::string name;
  double epoch_minutes = 0.0;  ///< minutes since Unix epoch; run times are relative to it
  LocalProjection projection;
  Strategy strategy = Strategy::huygens;
  WindConvention wind_convention = WindConvention::meteorological_from;
  FlankModel flank = FlankModel::length_to_breadth;
  int n_theta = 128;
  int n_bins = 72;
  std::optional<double> resample_spacing;
  std::size_t max_sources = 4096;
  double m_min = kDefaultMoistureCutoff;
  bool chain_previous = true;

  RosModelPair ros_model;
  std::optional<SatReference> sat_head;
  std::optional<SatReference> sat_back;

  FireFront initial_front{Ring{{1e-3, 0}, {-5e-4, 1e-3}, {-5e-4, -1e-3}}, 0.0};
  std::vector<StepSpec> steps;
  std::vector<std::string> notes;  ///< parse-time warnings (e.g. dropped hotspot rows)

  void validate() const {
    if (steps.empty()) throw ValidationError("steps must be non-empty");
    if (n_theta < 16) throw ValidationError("n_theta must be >= 16");
    if (n_bins < 4 || n_bins % 2) throw ValidationError("n_bins must be an even number >= 4");
    if (!(m_min > 0.0)) throw ValidationError("m_min must be > 0");
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& s = steps[k];
      const std::string at = "step " + std::to_string(k + 1) + ": ";
      if (!(s.dt > 0.0)) throw ValidationError(at + "dt must be positive");
      if (strategy == Strategy::frames && s.frames.empty())
        throw ValidationError(at + "frames strategy needs at least one frame anchor");
      auto check = [&](const ForcingSpec& f) {
        if (f.mode == RateMode::explicit_rates && (!f.head || !f.back))
          throw ValidationError(at + "explicit rates need both 'head' and 'back'");
        if (f.mode == RateMode::corrected && (!sat_head || !sat_back))
          throw ValidationError(at + "corrected rates need a sat_reference (or thermal block) for head and back");
        if (f.mode == RateMode::corrected && !f.wind_speed)
          throw ValidationError(at + "corrected rates need wind_speed");
        if (!f.wind_dir) throw ValidationError(at + "wind_dir is required");
        if (!f.wind_speed) throw ValidationError(at + "wind_speed is required");
      };
      if (strategy == Strategy::frames)
        for (const auto& fr : s.frames) check(fr.forcing);
      else
        check(s.forcing);
    }
  }
};

/// Full document: the base scenario plus optional named variants and perturbations.
struct ScenarioDocument {
  ScenarioConfig base;
  std::vector<std::pair<std::string, ScenarioConfig>> variants;
  std::vector<Perturbation> perturbations;
};

using FileReader = std::function<std::string(const std::string& path)>;

/// Reads files relative to `base_dir`.
inline FileReader filesystem_reader(std::filesystem::path base_dir) {
  return [base_dir](const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) p = base_dir / p;
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file '" + p.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
}

namespace detail {

using nlohmann::json;

inline double num(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) throw ValidationError(ctx + ": missing '" + key + "'");
  if (!j[key].is_number()) throw ValidationError(ctx + ": '" + key + "' must be a number");
  return j[key].get<double>();
}

inline double num_or(const json& j, const std::string& key, double fallback, const std::string& ctx) {
  return j.contains(key) ? num(j, key, ctx) : fallback;
}

inline double time_value(const json& j, double epoch, const std::string& ctx) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return io::parse_iso8601_minutes(j.get<std::string>()) - epoch;
  throw ValidationError(ctx + ": time must be minutes or an ISO 8601 string");
}

inline Point2 point(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError(ctx + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

/// Parsing context shared across one scenario.
struct Resolver {
  FileReader read;
  ExpressionFrame frame;
  std::map<std::string, double> constants;
  std::optional<LfmcCoefficients> lfmc;
  std::optional<ViFallback> vi;
  std::map<std::string, std::shared_ptr<const ScalarGrid>> grid_cache;

  std::shared_ptr<const ScalarGrid> grid(const std::string& path) {
    if (auto it = grid_cache.find(path); it != grid_cache.end()) return it->second;
    std::shared_ptr<const ScalarGrid> g;
    try {
      g = std::make_shared<const ScalarGrid>(io::parse_ascii_grid(read(path)));
    } catch (const ParseError& e) {
      throw ParseError("grid '" + path + "': " + e.what(), e.line(), e.column());
    }
    grid_cache.emplace(path, g);
    return g;
  }

  ScalarField expression(const std::string& text) {
    std::vector<std::string> vars{"x", "y", "t"};
    std::vector<double> fixed;
    for (const auto& [name, value] : constants) {
      vars.push_back(name);
      fixed.push_back(value);
    }
    auto expr = std::make_shared<const Expression>(Expression::parse(text, vars));
    const ExpressionFrame fr = frame;
    return {[expr, fr, fixed](Point2 p, double t) {
              std::vector<double> slots{p.x / fr.unit_m + fr.x_offset, p.y / fr.unit_m + fr.y_offset, t};
              slots.insert(slots.end(), fixed.begin(), fixed.end());
              return std::optional<double>(expr->eval(slots));
            },
            "expression '" + text + "'"};
  }

  ScalarField field(const json& j, const std::string& ctx, bool moisture = false) {
    if (j.is_number()) return ScalarField::constant(j.get<double>());
    if (j.is_string()) return expression(j.get<std::string>());
    if (j.is_object() && j.contains("grid")) {
      const std::string path = j["grid"].get<std::string>();
      auto g = grid(path);
      return {[g](Point2 p, double) { return sample_grid(*g, p); }, "grid '" + path + "'"};
    }
    if (moisture && j.is_object() && j.contains("lfmc")) {
      if (!lfmc) throw ValidationError(ctx + ": 'lfmc' moisture needs top-level lfmc coefficients");
      const json& m = j["lfmc"];
      if (!m.contains("ndvi") || !m.contains("lst")) throw ValidationError(ctx + ": lfmc moisture needs ndvi and lst");
      ScalarField ndvi = field(m["ndvi"], ctx + ".ndvi"), lst = field(m["lst"], ctx + ".lst");
      const double doy = num(m, "doy", ctx);
      const LfmcCoefficients c = *lfmc;
      return {[ndvi, lst, doy, c](Point2 p, double t) -> std::optional<double> {
                auto n = ndvi.eval(p, t), l = lst.eval(p, t);
                if (!n || !l) return std::nullopt;
                return predict_lfmc(c, {std::clamp(*n, -1.0, 1.0), *l, doy, {}});
              },
              "lfmc(" + ndvi.source + ", " + lst.source + ")"};
    }
    if (moisture && j.is_object() && j.contains("vi")) {
      if (!vi) throw ValidationError(ctx + ": 'vi' moisture needs top-level lfmc.vi_fallback");
      ScalarField index = field(j["vi"], ctx + ".vi");
      const ViFallback fb = *vi;
      return {[index, fb](Point2 p, double t) -> std::optional<double> {
                auto v = index.eval(p, t);
                if (!v) return std::nullopt;
                return predict_lfmc_vi(fb, *v);
              },
              "vi(" + index.source + ")"};
    }
    throw ValidationError(ctx + ": expected a number, an expression string, or an object with 'grid'" +
                          std::string(moisture ? ", 'lfmc' or 'vi'" : ""));
  }
};

/// Forcing keys may appear on the environment block, a step, or a frame; the
/// more specific object wins.
inline json merge(const json& base, const json& over) {
  json out = base.is_object() ? base : json::object();
  if (over.is_object())
    for (auto it = over.begin(); it != over.end(); ++it) out[it.key()] = it.value();
  return out;
}

inline ForcingSpec forcing(const json& j, Resolver& r, const std::string& ctx) {
  ForcingSpec f;
  const std::string mode = j.value("rates", std::string("explicit"));
  if (mode == "explicit") f.mode = RateMode::explicit_rates;
  else if (mode == "corrected") f.mode = RateMode::corrected;
  else throw ValidationError(ctx + ": rates must be 'explicit' or 'corrected'");
  if (j.contains("head")) f.head = r.field(j["head"], ctx + ".head");
  if (j.contains("back")) f.back = r.field(j["back"], ctx + ".back");
  if (j.contains("wind_speed")) f.wind_speed = r.field(j["wind_speed"], ctx + ".wind_speed");
  if (j.contains("wind_dir")) f.wind_dir = r.field(j["wind_dir"], ctx + ".wind_dir");
  if (j.contains("moisture")) f.moisture = r.field(j["moisture"], ctx + ".moisture", true);
  if (j.contains("spread_offset_deg")) f.spread_offset_deg = num(j, "spread_offset_deg", ctx);
  return f;
}

inline RosModelParams ros_params(const json& j, double m_min, const std::string& ctx) {
  RosModelParams p{num(j, "A", ctx), num(j, "alpha", ctx), num(j, "beta", ctx), m_min};
  p.validate();
  return p;
}

inline SatReference sat_ref(const json& j, const std::string& ctx) {
  return {num(j, "ros_thermal", ctx), num(j, "wind_sat", ctx), num(j, "moisture_sat", ctx)};
}

inline std::vector<HotspotRecord> load_hotspots(const json& j, Resolver& r, ScenarioConfig& cfg,
                                                const std::string& ctx) {
  if (!j.contains("hotspots") || !j["hotspots"].is_string()) throw ValidationError(ctx + ": missing 'hotspots' path");
  const std::string path = j["hotspots"].get<std::string>();
  try {
    auto parsed = io::parse_hotspot_csv(r.read(path), cfg.projection, cfg.epoch_minutes);
    for (const auto& w : parsed.warnings)
      cfg.notes.push_back(path + " line " + std::to_string(w.line) + ": " + w.message);
    return parsed.records;
  } catch (const ParseError& e) {
    throw ParseError("hotspots '" + path + "': " + e.what(), e.line(), e.column());
  }
}

inline HullSelector hull_selector(const json& j) {
  return j.contains("alpha_radius") ? HullSelector::alpha(j["alpha_radius"].get<double>()) : HullSelector::convex();
}

/// Parses one scenario object (the base document, or the base merged with a variant).
inline ScenarioConfig parse_config_object(const json& doc, const FileReader& read) {
  ScenarioConfig cfg;
  const std::string ctx = "config";
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  cfg.name = doc.value("name", std::string("scenario"));
  if (doc.contains("epoch")) cfg.epoch_minutes = time_value(doc["epoch"], 0.0, "epoch");
  if (doc.contains("projection_center")) {
    const json& c = doc["projection_center"];
    cfg.projection = LocalProjection({num(c, "lon", "projection_center"), num(c, "lat", "projection_center")});
  }
  if (doc.contains("strategy")) cfg.strategy = parse_strategy(doc["strategy"].get<std::string>());
  if (doc.contains("wind_convention")) {
    const std::string w = doc["wind_convention"].get<std::string>();
    if (w == "meteorological_from") cfg.wind_convention = WindConvention::meteorological_from;
    else if (w == "compass_toward") cfg.wind_convention = WindConvention::compass_toward;
    else if (w == "math_toward") cfg.wind_convention = WindConvention::math_toward;
    else throw ValidationError("wind_convention must be meteorological_from, compass_toward or math_toward");
  }
  if (doc.contains("flank_model")) cfg.flank = parse_flank_model(doc["flank_model"].get<std::string>());
  cfg.n_theta = static_cast<int>(num_or(doc, "n_theta", 128, ctx));
  cfg.n_bins = static_cast<int>(num_or(doc, "n_bins", 72, ctx));
  if (doc.contains("resample_spacing") && !doc["resample_spacing"].is_null())
    cfg.resample_spacing = num(doc, "resample_spacing", ctx);
  cfg.max_sources = static_cast<std::size_t>(num_or(doc, "max_sources", 4096, ctx));
  cfg.m_min = num_or(doc, "m_min", kDefaultMoistureCutoff, ctx);
  cfg.chain_previous = doc.value("chain_previous", true);

  Resolver r{read, {}, {}, {}, {}, {}};
  if (doc.contains("expression_frame")) {
    const json& f = doc["expression_frame"];
    r.frame = {num_or(f, "unit_m", 1.0, "expression_frame"), num_or(f, "x_offset", 0.0, "expression_frame"),
               num_or(f, "y_offset", 0.0, "expression_frame")};
    if (!(r.frame.unit_m > 0.0)) throw ValidationError("expression_frame.unit_m must be > 0");
  }
  if (doc.contains("constants"))
    for (auto it = doc["constants"].begin(); it != doc["constants"].end(); ++it) {
      if (it.key() == "x" || it.key() == "y" || it.key() == "t")
        throw ValidationError("constant '" + it.key() + "' shadows a coordinate variable");
      r.constants[it.key()] = it.value().get<double>();
    }

  if (doc.contains("lfmc")) {
    const json& l = doc["lfmc"];
    if (l.contains("coefficients")) {
      const json& c = l["coefficients"];
      r.lfmc = LfmcCoefficients{num(c, "A", "lfmc"), num(c, "B", "lfmc"), num(c, "C", "lfmc"), num(c, "D1", "lfmc"),
                                num(c, "D2", "lfmc")};
    } else if (l.contains("calibration_csv")) {
      auto rows = io::parse_lfmc_rows(read(l["calibration_csv"].get<std::string>()));
      std::vector<LfmcObservation> obs;
      const std::string stratum = l.value("stratum", std::string());
      for (const auto& row : rows)
        if (stratum.empty() || row.label == stratum) obs.push_back(row.obs);
      r.lfmc = calibrate_lfmc(obs).coefficients;
    }
    if (l.contains("vi_fallback"))
      r.vi = ViFallback{num(l["vi_fallback"], "slope", "lfmc.vi_fallback"),
                        num(l["vi_fallback"], "offset", "lfmc.vi_fallback")};
    if (r.lfmc) r.lfmc->validate();
  }

  if (doc.contains("ros_model")) {
    cfg.ros_model.head = ros_params(doc["ros_model"]["head"], cfg.m_min, "ros_model.head");
    cfg.ros_model.back = ros_params(doc["ros_model"]["back"], cfg.m_min, "ros_model.back");
  } else {
    cfg.ros_model.head.m_min = cfg.ros_model.back.m_min = cfg.m_min;
  }
  if (doc.contains("sat_reference")) {
    cfg.sat_head = sat_ref(doc["sat_reference"]["head"], "sat_reference.head");
    cfg.sat_back = sat_ref(doc["sat_reference"]["back"], "sat_reference.back");
  }

  if (doc.contains("thermal")) {
    // Thermal rates from two hotspot snapshots; the later one seeds the run.
    const json& t = doc["thermal"];
    auto records = load_hotspots(t, r, cfg, "thermal");
    const double t0 = time_value(t.at("t0"), cfg.epoch_minutes, "thermal.t0");
    const double t1 = time_value(t.at("t1"), cfg.epoch_minutes, "thermal.t1");
    const double window = num_or(t, "window", 15.0, "thermal");
    const HullSelector hull = hull_selector(t);
    const FireFront f0 = front_from_hotspots(snapshot_at(records, t0, window), hull, t0);
    const FireFront f1 = front_from_hotspots(snapshot_at(records, t1, window), hull, t1);
    const auto profile = thermal_ros(f0, f1, t1 - t0, cfg.n_bins);
    const json head = t.value("head_conditions", json::object()), back = t.value("back_conditions", json::object());
    cfg.sat_head = SatReference{profile.head.value, num(head, "wind_sat", "thermal.head_conditions"),
                                num(head, "moisture_sat", "thermal.head_conditions")};
    cfg.sat_back = SatReference{profile.back.value, num(back, "wind_sat", "thermal.back_conditions"),
                                num(back, "moisture_sat", "thermal.back_conditions")};
    cfg.initial_front = f1;
  }

  if (doc.contains("initial_front")) {
    const json& f = doc["initial_front"];
    const double t = f.contains("time") ? time_value(f["time"], cfg.epoch_minutes, "initial_front.time") : 0.0;
    if (f.contains("point")) {
      const Point2 c = point(f["point"], "initial_front.point");
      if (f.contains("radius")) {
        const double radius = num(f, "radius", "initial_front");
        if (!(radius > 0.0)) throw ValidationError("initial_front.radius must be positive");
        Ring ring;
        for (int k = 0; k < 64; ++k) {
          const double a = kTwoPi * k / 64;
          ring.push_back(c + radius * Point2{std::cos(a), std::sin(a)});
        }
        cfg.initial_front = FireFront(std::move(ring), t);
      } else {
        const double eps = 1e-3;
        cfg.initial_front = FireFront(Ring{c + Point2{eps, 0}, c + Point2{-eps / 2, eps}, c + Point2{-eps / 2, -eps}}, t);
      }
    } else if (f.contains("polygon")) {
      Ring ring;
      const bool lonlat = f.value("crs", std::string("local")) == "lonlat";
      for (const auto& v : f["polygon"]) {
        const Point2 p = point(v, "initial_front.polygon");
        ring.push_back(lonlat ? cfg.projection.forward({p.x, p.y}) : p);
      }
      if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
      cfg.initial_front = FireFront::from_ring(std::move(ring), t);
    } else if (f.contains("hotspots")) {
      auto records = load_hotspots(f, r, cfg, "initial_front");
      const double at = time_value(f.at("at"), cfg.epoch_minutes, "initial_front.at");
      cfg.initial_front = front_from_hotspots(snapshot_at(records, at, num_or(f, "window", 15.0, "initial_front")),
                                              hull_selector(f), at);
    } else {
      throw ValidationError("initial_front needs 'point', 'polygon' or 'hotspots'");
    }
  }

  const json env = doc.value("environment", json::object());
  if (!doc.contains("steps") || !doc["steps"].is_array()) throw ValidationError("steps must be non-empty");
  std::size_t k = 0;
  for (const json& sj : doc["steps"]) {
    ++k;
    const std::string sctx = "step " + std::to_string(k);
    StepSpec s;
    s.dt = num(sj, "dt", sctx);
    const json merged = merge(env, sj);
    s.forcing = forcing(merged, r, sctx);
    if (sj.contains("frames")) {
      std::size_t i = 0;
      for (const json& fj : sj["frames"]) {
        ++i;
        const std::string fctx = sctx + " frame " + std::to_string(i);
        FrameAnchorSpec fa;
        fa.anchor = point(fj.at("anchor"), fctx + ".anchor");
        fa.forcing = forcing(merge(merged, fj), r, fctx);
        if (fj.contains("duration")) fa.duration = num(fj, "duration", fctx);
        s.frames.push_back(std::move(fa));
      }
    }
    cfg.steps.push_back(std::move(s));
  }
  cfg.validate();
  return cfg;
}

inline Perturbation parse_perturbation(const json& j) {
  Perturbation p;
  p.name = j.value("name", std::string("perturbation"));
  p.wind_dir_offset_deg = num_or(j, "wind_dir_offset_deg", 0.0, p.name);
  p.wind_speed_scale = num_or(j, "wind_speed_scale", 1.0, p.name);
  p.wind_speed_offset = num_or(j, "wind_speed_offset", 0.0, p.name);
  p.head_scale = num_or(j, "head_scale", 1.0, p.name);
  p.back_scale = num_or(j, "back_scale", 1.0, p.name);
  if (p.wind_speed_scale < 0 || p.head_scale < 0 || p.back_scale < 0)
    throw ValidationError("perturbation '" + p.name + "': scales must be >= 0");
  return p;
}

}  // namespace detail

inline ScenarioDocument parse_scenario(const std::string& text, const FileReader& read) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [l, c] = io::detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("config is not valid JSON: ") + e.what(), l, c);
  }
  try {
    ScenarioDocument out;
    nlohmann::json base = doc;
    base.erase("variants");
    base.erase("perturbations");
    out.base = detail::parse_config_object(base, read);
    if (doc.contains("variants"))
      for (const auto& v : doc["variants"]) {
        const std::string name = v.value("name", std::string("variant"));
        try {
          auto merged = detail::merge(base, v);
          merged.erase("name");
          merged["name"] = out.base.name + "/" + name;
          out.variants.emplace_back(name, detail::parse_config_object(merged, read));
        } catch (const ValidationError& e) {
          throw ValidationError("variant '" + name + "': " + e.what());
        }
      }
    if (doc.contains("perturbations"))
      for (const auto& p : doc["perturbations"]) out.perturbations.push_back(detail::parse_perturbation(p));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
}

inline ScenarioDocument load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), filesystem_reader(path.parent_path()));
}

}  // namespace firefront
