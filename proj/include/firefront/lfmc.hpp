#pragma once

// Live fuel moisture content (percent) from NDVI, land surface temperature and
// day of year:
//
//   LFMC = A + B NDVI + C LST + D1 sin(2 pi DOY / 365) + D2 cos(2 pi DOY / 365)

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"
#include "firefront/least_squares.hpp"

namespace firefront {

struct LfmcCoefficients {
  double intercept_a = 0.0;  ///< percent
  double ndvi_b = 0.0;       ///< percent per unit NDVI
  double lst_c = 0.0;        ///< percent per kelvin
  double season_d1 = 0.0;    ///< sine amplitude, percent
  double season_d2 = 0.0;    ///< cosine amplitude, percent

  void validate() const {
    for (double v : {intercept_a, ndvi_b, lst_c, season_d1, season_d2})
      if (!std::isfinite(v)) throw ValidationError("LFMC coefficients must be finite");
  }
};

struct LfmcObservation {
  double ndvi = 0.0;
  double lst = 0.0;  ///< kelvin
  double doy = 1.0;  ///< day of year, 1..366
  std::optional<double> lfmc;

  void validate() const {
    if (!(ndvi >= -1.0 && ndvi <= 1.0)) throw ValidationError("NDVI must lie in [-1, 1]");
    if (!(doy >= 1.0 && doy <= 366.0)) throw ValidationError("day of year must lie in [1, 366]");
    if (!std::isfinite(lst)) throw ValidationError("LST must be finite");
  }
};

/// Single vegetation-index fallback: LFMC = slope * VI + offset.
struct ViFallback {
  double slope_a = 0.0;
  double offset_b = 0.0;
};

/// Raw linear predictor (unclamped); kept separate so linearity in the
/// coefficients can be checked directly.
inline double lfmc_linear_predictor(const LfmcCoefficients& c, const LfmcObservation& o) {
  const double phase = kTwoPi * o.doy / 365.0;
  return c.intercept_a + c.ndvi_b * o.ndvi + c.lst_c * o.lst + c.season_d1 * std::sin(phase) +
         c.season_d2 * std::cos(phase);
}

/// Moisture cannot be negative, so predictions are clamped at 0.
inline double predict_lfmc(const LfmcCoefficients& c, const LfmcObservation& o) {
  o.validate();
  return std::max(0.0, lfmc_linear_predictor(c, o));
}

inline double predict_lfmc_vi(const ViFallback& fb, double vi) { return std::max(0.0, fb.slope_a * vi + fb.offset_b); }

struct LfmcFit {
  LfmcCoefficients coefficients;
  FitReport report;
};

namespace detail {

inline Design lfmc_design(const std::vector<LfmcObservation>& rows) {
  Design d;
  d.names = {"intercept", "ndvi", "lst", "season_sin", "season_cos"};
  d.rows.reserve(rows.size());
  for (const auto& o : rows) {
    const double phase = kTwoPi * o.doy / 365.0;
    d.rows.push_back({1.0, o.ndvi, o.lst, std::sin(phase), std::cos(phase)});
  }
  return d;
}

inline FitReport lfmc_report(const LfmcCoefficients& c, const std::vector<LfmcObservation>& rows) {
  std::vector<double> obs, pred;
  for (const auto& o : rows) {
    obs.push_back(*o.lfmc);
    pred.push_back(lfmc_linear_predictor(c, o));
  }
  return score_predictions(obs, pred);
}

}  // namespace detail

inline FitReport evaluate_lfmc(const LfmcCoefficients& c, const std::vector<LfmcObservation>& rows) {
  for (const auto& o : rows)
    if (!o.lfmc) throw ValidationError("evaluation rows need an observed LFMC value");
  return detail::lfmc_report(c, rows);
}

inline LfmcFit calibrate_lfmc(const std::vector<LfmcObservation>& rows) {
  if (rows.size() < 5) throw ValidationError("LFMC calibration needs at least 5 rows, got " + std::to_string(rows.size()));
  std::vector<double> y;
  y.reserve(rows.size());
  for (const auto& o : rows) {
    o.validate();
    if (!o.lfmc) throw ValidationError("calibration row without an observed LFMC value");
    y.push_back(*o.lfmc);
  }
  const auto beta = fit_ols(detail::lfmc_design(rows), y);
  LfmcFit fit;
  fit.coefficients = {beta[0], beta[1], beta[2], beta[3], beta[4]};
  fit.report = detail::lfmc_report(fit.coefficients, rows);
  if (fit.coefficients.ndvi_b < 0.0) fit.report.warnings.push_back("NDVI coefficient B is negative (expected > 0)");
  if (fit.coefficients.lst_c > 0.0) fit.report.warnings.push_back("LST coefficient C is positive (expected < 0)");
  return fit;
}

struct LabeledObservation {
  std::string label;
  LfmcObservation obs;
};

inline std::map<std::string, LfmcFit> calibrate_lfmc_stratified(const std::vector<LabeledObservation>& rows) {
  std::map<std::string, std::vector<LfmcObservation>> groups;
  for (const auto& r : rows) groups[r.label].push_back(r.obs);
  for (const auto& [label, g] : groups)
    if (g.size() < 5)
      throw ValidationError("stratum '" + label + "' has " + std::to_string(g.size()) + " rows; at least 5 required");
  std::map<std::string, LfmcFit> out;
  for (const auto& [label, g] : groups) {
    try {
      out.emplace(label, calibrate_lfmc(g));
    } catch (const SingularFitError& e) {
      throw SingularFitError("stratum '" + label + "': " + e.what());
    }
  }
  return out;
}

struct FoldReport {
  std::string fold;
  std::size_t train_rows = 0;
  FitReport in_fold;      ///< training fit on the complement
  FitReport out_of_fold;  ///< held-out score on the fold itself
};

/// Leave-one-label-out cross-validation.
inline std::vector<FoldReport> cross_validate_lfmc(const std::vector<LabeledObservation>& rows) {
  std::map<std::string, std::vector<LfmcObservation>> groups;
  for (const auto& r : rows) groups[r.label].push_back(r.obs);
  if (groups.size() < 2) throw ValidationError("cross-validation needs at least 2 folds");
  std::vector<FoldReport> out;
  for (const auto& [label, held] : groups) {
    std::vector<LfmcObservation> train;
    for (const auto& r : rows)
      if (r.label != label) train.push_back(r.obs);
    if (train.size() < 5)
      throw ValidationError("fold '" + label + "' leaves only " + std::to_string(train.size()) + " training rows");
    FoldReport f;
    f.fold = label;
    f.train_rows = train.size();
    LfmcFit fit = calibrate_lfmc(train);
    f.in_fold = fit.report;
    f.out_of_fold = evaluate_lfmc(fit.coefficients, held);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace firefront
