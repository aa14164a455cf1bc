// firefront: command-line front end.
//
// Exit codes: 0 success, 2 input or validation error, 3 runtime simulation error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "firefront/firefront.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace firefront;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << text;
}

json fit_report_json(const FitReport& r) {
  return {{"n", r.n}, {"rmse", r.rmse}, {"mae", r.mae}, {"r2", r.r2}, {"warnings", r.warnings}};
}

json lfmc_json(const LfmcCoefficients& c) {
  return {{"A", c.intercept_a}, {"B", c.ndvi_b}, {"C", c.lst_c}, {"D1", c.season_d1}, {"D2", c.season_d2}};
}

json summary_json(const RunResult& r) {
  json steps = json::array();
  for (const auto& d : r.steps)
    steps.push_back({{"step", d.step},
                     {"time_minutes", d.time},
                     {"dt_minutes", d.dt},
                     {"mean_head_m_per_min", d.mean_head},
                     {"mean_back_m_per_min", d.mean_back},
                     {"sources", d.sources},
                     {"stalled", d.stalled},
                     {"area_m2", d.area}});
  json areas = json::array();
  for (const auto& f : r.fronts) areas.push_back(f.area());
  return {{"status", to_string(r.status)}, {"fronts", r.fronts.size()}, {"areas_m2", areas}, {"steps", steps},
          {"warnings", r.warnings}};
}

struct OutputSet {
  bool geojson = false;
  bool csv = false;
  bool svg = false;
};

OutputSet parse_format(const std::string& f) {
  if (f == "geojson") return {true, false, false};
  if (f == "csv") return {false, true, false};
  if (f == "svg") return {false, false, true};
  if (f == "all") return {true, true, true};
  throw ValidationError("--format must be geojson, csv, svg or all");
}

void write_run(const fs::path& dir, const std::string& title, const RunResult& r, const LocalProjection& proj,
               const OutputSet& out) {
  fs::create_directories(dir);
  if (out.geojson) write_file(dir / "fronts.geojson", io::write_fronts_geojson(r, proj));
  if (out.csv) {
    write_file(dir / "fronts.csv", io::write_fronts_csv(r, proj));
    write_file(dir / "diagnostics.csv", io::write_diagnostics_csv(r));
  }
  if (out.svg) write_file(dir / "fronts.svg", io::render_fronts_svg(r.fronts, {}, title));
  write_file(dir / "summary.json", summary_json(r).dump(2) + "\n");
}

int cmd_simulate(const std::string& config, const std::string& out_dir, const std::string& format,
                 const std::string& strategy) {
  const OutputSet outputs = parse_format(format);
  ScenarioDocument doc = load_scenario(config);
  auto apply_strategy = [&](ScenarioConfig& c) {
    if (!strategy.empty()) c.strategy = parse_strategy(strategy);
  };
  apply_strategy(doc.base);
  for (auto& [name, v] : doc.variants) apply_strategy(v);

  const fs::path out(out_dir);
  if (doc.variants.empty()) {
    RunResult r = run_scenario(doc.base);
    write_run(out, doc.base.name, r, doc.base.projection, outputs);
    std::cout << doc.base.name << ": " << to_string(r.status) << ", " << r.fronts.size() << " fronts, final area "
              << r.fronts.back().area() << " m2\n";
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  } else {
    std::vector<io::SvgPanel> panels;
    for (const auto& [name, cfg] : doc.variants) {
      RunResult r;
      try {
        r = run_scenario(cfg);
      } catch (const ValidationError& e) {
        throw ValidationError("variant '" + name + "': " + e.what());
      } catch (const SimulationError& e) {
        throw SimulationError("variant '" + name + "': " + e.what());
      }
      write_run(out / name, cfg.name, r, cfg.projection, outputs);
      panels.push_back({name, r.fronts});
      std::cout << cfg.name << ": " << to_string(r.status) << ", " << r.fronts.size() << " fronts, final area "
                << r.fronts.back().area() << " m2\n";
      for (const auto& w : r.warnings) std::cerr << "warning: " << name << ": " << w << "\n";
    }
    if (outputs.svg) write_file(out / "variants.svg", io::render_panels_svg(panels));
  }

  if (!doc.perturbations.empty()) {
    SweepResult sweep = sensitivity_sweep(doc.base, doc.perturbations);
    json runs = json::array();
    for (std::size_t i = 0; i < sweep.runs.size(); ++i) {
      runs.push_back({{"name", sweep.names[i]},
                      {"status", to_string(sweep.runs[i].status)},
                      {"final_area_m2", sweep.runs[i].fronts.back().area()}});
      if (i > 0 && outputs.geojson) {
        fs::create_directories(out / "sweep");
        write_file(out / "sweep" / (sweep.names[i] + ".geojson"),
                   io::write_fronts_geojson(sweep.runs[i], doc.base.projection));
      }
    }
    fs::create_directories(out);
    write_file(out / "sweep.json",
               json{{"runs", runs}, {"hausdorff_m", sweep.distance}, {"names", sweep.names}}.dump(2) + "\n");
    std::cout << "sweep: " << doc.perturbations.size() << " perturbations, max distance to base ";
    double m = 0;
    for (double d : sweep.distance[0]) m = std::max(m, d);
    std::cout << m << " m\n";
  }
  return kExitOk;
}

int cmd_calibrate_lfmc(const std::string& rows_path, bool stratified, const std::string& cv_col) {
  const std::string text = read_file(rows_path);
  if (!cv_col.empty()) {
    auto rows = io::parse_lfmc_rows(text, cv_col);
    json folds = json::array();
    for (const auto& f : cross_validate_lfmc(rows))
      folds.push_back({{"fold", f.fold},
                       {"train_rows", f.train_rows},
                       {"in_fold", fit_report_json(f.in_fold)},
                       {"out_of_fold", fit_report_json(f.out_of_fold)}});
    std::cout << json{{"cross_validation", folds}}.dump(2) << "\n";
    return kExitOk;
  }
  auto rows = io::parse_lfmc_rows(text);
  if (stratified) {
    json strata = json::object();
    for (const auto& [label, fit] : calibrate_lfmc_stratified(rows))
      strata[label] = {{"coefficients", lfmc_json(fit.coefficients)}, {"report", fit_report_json(fit.report)}};
    std::cout << json{{"strata", strata}}.dump(2) << "\n";
    return kExitOk;
  }
  std::vector<LfmcObservation> obs;
  for (const auto& r : rows) obs.push_back(r.obs);
  LfmcFit fit = calibrate_lfmc(obs);
  std::cout << json{{"coefficients", lfmc_json(fit.coefficients)}, {"report", fit_report_json(fit.report)}}.dump(2)
            << "\n";
  return kExitOk;
}

int cmd_calibrate_ros(const std::string& rows_path) {
  RosCalibration cal = calibrate_ros(io::parse_ros_rows(read_file(rows_path)));
  std::cout << json{{"params",
                     {{"A", cal.params.scale_a}, {"alpha", cal.params.wind_exp_alpha}, {"beta", cal.params.moist_coef_beta}}},
                    {"report", fit_report_json(cal.report)}}
                   .dump(2)
            << "\n";
  return kExitOk;
}

int cmd_estimate_ros(const std::string& hotspots, const std::string& t0s, const std::string& t1s, int bins,
                     std::optional<double> alpha, double window) {
  const std::string text = read_file(hotspots);
  // Project about the mean detection location.
  auto first = io::parse_hotspot_csv(text, LocalProjection());
  double lon = 0, lat = 0;
  for (const auto& r : first.records) {
    lon += r.lon;
    lat += r.lat;
  }
  const LonLat center{lon / first.records.size(), lat / first.records.size()};
  auto parsed = io::parse_hotspot_csv(text, LocalProjection(center));
  for (const auto& w : parsed.warnings) std::cerr << "warning: line " << w.line << ": " << w.message << "\n";

  const double t0 = io::parse_iso8601_minutes(t0s), t1 = io::parse_iso8601_minutes(t1s);
  if (!(t1 > t0)) throw ValidationError("--t1 must be later than --t0");
  const HullSelector hull = alpha ? HullSelector::alpha(*alpha) : HullSelector::convex();
  auto snap0 = snapshot_at(parsed.records, t0, window), snap1 = snapshot_at(parsed.records, t1, window);
  auto front = [&](const std::vector<HotspotRecord>& s, double t, const char* which) {
    try {
      return front_from_hotspots(s, hull, t);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("snapshot ") + which + ": " + e.what());
    }
  };
  const FireFront f0 = front(snap0, t0, "t0"), f1 = front(snap1, t1, "t1");
  const auto p = thermal_ros(f0, f1, t1 - t0, bins);
  json angles = json::array(), rates = json::array();
  for (std::size_t i = 0; i < p.angles.size(); ++i) {
    angles.push_back(p.angles[i].degrees());
    rates.push_back(p.rates[i]);
  }
  std::cout << json{{"center", {{"lon", center.lon}, {"lat", center.lat}}},
                    {"dt_minutes", t1 - t0},
                    {"points", {{"t0", snap0.size()}, {"t1", snap1.size()}}},
                    {"angle_convention", "degrees counterclockwise from east"},
                    {"angles_deg", angles},
                    {"rates_m_per_min", rates},
                    {"head", {{"angle_deg", p.head.angle.degrees()}, {"rate_m_per_min", p.head.value}}},
                    {"back", {{"angle_deg", p.back.angle.degrees()}, {"rate_m_per_min", p.back.value}}}}
                   .dump(2)
            << "\n";
  return kExitOk;
}

int cmd_render(const std::string& fronts_path, const std::string& out_path) {
  auto parsed = io::parse_fronts_geojson(read_file(fronts_path));
  if (parsed.empty()) throw ValidationError("no fronts to render");
  double lon = 0, lat = 0;
  std::size_t n = 0;
  for (const auto& f : parsed)
    for (const auto& ll : f.ring) {
      lon += ll.lon;
      lat += ll.lat;
      ++n;
    }
  const LocalProjection proj({lon / n, lat / n});
  write_file(out_path, io::render_fronts_svg(io::fronts_from_geojson(parsed, proj)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"firefront: satellite-driven wildfire perimeter simulation"};
  app.require_subcommand(1);

  std::string config, out_dir, format = "all", strategy;
  auto* sim = app.add_subcommand("simulate", "Run a scenario config and write fronts");
  sim->add_option("--config", config, "Scenario JSON")->required();
  sim->add_option("--out", out_dir, "Output directory")->required();
  sim->add_option("--format", format, "geojson | csv | svg | all")->capture_default_str();
  sim->add_option("--strategy", strategy, "Override the config strategy: huygens | frames");

  std::string rows;
  bool stratified = false;
  std::string cv_col;
  auto* cal_lfmc = app.add_subcommand("calibrate-lfmc", "Fit LFMC coefficients from a CSV of observations");
  cal_lfmc->add_option("--rows", rows, "CSV: stratum,ndvi,lst_k,doy,lfmc_pct")->required();
  cal_lfmc->add_flag("--stratified", stratified, "Fit one model per stratum");
  cal_lfmc->add_option("--cv-folds", cv_col, "Leave-one-label-out cross-validation over this column");

  std::string ros_rows;
  auto* cal_ros = app.add_subcommand("calibrate-ros", "Fit A, alpha, beta from matched (R, U, M) rows");
  cal_ros->add_option("--rows", ros_rows, "CSV: ros_m_per_min,wind_m_per_s,moisture_pct")->required();

  std::string hotspots, t0, t1;
  int bins = 72;
  std::optional<double> alpha;
  double window = 15.0;
  auto* est = app.add_subcommand("estimate-ros", "Directional thermal rates between two hotspot snapshots");
  est->add_option("--hotspots", hotspots, "FIRMS-style CSV")->required();
  est->add_option("--t0", t0, "Earlier snapshot time, ISO 8601 UTC")->required();
  est->add_option("--t1", t1, "Later snapshot time, ISO 8601 UTC")->required();
  est->add_option("--bins", bins, "Angular bins (even)")->capture_default_str();
  est->add_option("--alpha-shape", alpha, "Alpha-shape radius in meters (default: convex hull)");
  est->add_option("--window", window, "Acquisition grouping window, minutes")->capture_default_str();

  std::string fronts_path, svg_out;
  auto* render = app.add_subcommand("render", "Render a fronts GeoJSON to SVG");
  render->add_option("--fronts", fronts_path, "FeatureCollection written by simulate")->required();
  render->add_option("--out", svg_out, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (sim->parsed()) return cmd_simulate(config, out_dir, format, strategy);
    if (cal_lfmc->parsed()) return cmd_calibrate_lfmc(rows, stratified, cv_col);
    if (cal_ros->parsed()) return cmd_calibrate_ros(ros_rows);
    if (est->parsed()) return cmd_estimate_ros(hotspots, t0, t1, bins, alpha, window);
    if (render->parsed()) return cmd_render(fronts_path, svg_out);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SimulationError& e) {
    std::cerr << "simulation error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitValidation;
}
