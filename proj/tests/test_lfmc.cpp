#include <gtest/gtest.h>

#include <random>

#include "firefront/lfmc.hpp"

using namespace firefront;

namespace {

const LfmcCoefficients kTruth{80, 60, -0.2, 10, -5};

std::vector<LfmcObservation> synth(const LfmcCoefficients& c, std::size_t n, unsigned seed, double noise = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ndvi(0.1, 0.9), lst(280, 320), doy(1, 365);
  std::normal_distribution<double> eps(0.0, noise > 0 ? noise : 1.0);
  std::vector<LfmcObservation> rows;
  for (std::size_t i = 0; i < n; ++i) {
    LfmcObservation o{ndvi(rng), lst(rng), std::floor(doy(rng)), {}};
    o.lfmc = lfmc_linear_predictor(c, o) + (noise > 0 ? eps(rng) : 0.0);
    rows.push_back(o);
  }
  return rows;
}

double sse(const LfmcCoefficients& c, const std::vector<LfmcObservation>& rows) {
  double s = 0;
  for (const auto& o : rows) {
    const double e = *o.lfmc - lfmc_linear_predictor(c, o);
    s += e * e;
  }
  return s;
}

void expect_coefficients_near(const LfmcCoefficients& a, const LfmcCoefficients& b, double tol) {
  EXPECT_NEAR(a.intercept_a, b.intercept_a, tol);
  EXPECT_NEAR(a.ndvi_b, b.ndvi_b, tol);
  EXPECT_NEAR(a.lst_c, b.lst_c, tol);
  EXPECT_NEAR(a.season_d1, b.season_d1, tol);
  EXPECT_NEAR(a.season_d2, b.season_d2, tol);
}

}  // namespace

TEST(PredictLfmc, Examples) {
  EXPECT_NEAR(predict_lfmc({100, 0, 0, 0, 5}, {0, 0, 365, {}}), 105.0, 1e-12);
  EXPECT_NEAR(predict_lfmc({50, 100, 0, 0, 0}, {0.5, 0, 1, {}}), 100.0, 1e-12);

  // Evaluated independently in long double.
  const long double ph = 2.0L * 3.14159265358979323846264338327950288L * 91.0L / 365.0L;
  const long double expect = 80.0L + 60.0L * 0.4L - 0.2L * 300.0L + 10.0L * std::sin(ph) - 5.0L * std::cos(ph);
  EXPECT_NEAR(predict_lfmc(kTruth, {0.4, 300, 91, {}}), static_cast<double>(expect), 1e-12);
}

TEST(PredictLfmc, ClampAndValidation) {
  EXPECT_DOUBLE_EQ(predict_lfmc({-10, 0, 0, 0, 0}, {0, 0, 1, {}}), 0.0);
  EXPECT_THROW(predict_lfmc(kTruth, {1.5, 300, 10, {}}), ValidationError);
  EXPECT_THROW(predict_lfmc(kTruth, {0.5, 300, 0, {}}), ValidationError);
}

TEST(PredictLfmcVi, Examples) {
  EXPECT_DOUBLE_EQ(predict_lfmc_vi({0, 120}, 0.37), 120.0);
  EXPECT_DOUBLE_EQ(predict_lfmc_vi({200, 20}, 0.5), 120.0);
  EXPECT_DOUBLE_EQ(predict_lfmc_vi({100, -50}, 0.2), 0.0);
}

TEST(PredictLfmc, LinearInCoefficients) {
  const LfmcCoefficients c1{10, 20, -0.1, 3, 4}, c2{-5, 7, 0.05, -2, 1};
  const LfmcCoefficients sum{5, 27, -0.05, 1, 5};
  for (double doy : {1.0, 45.0, 200.0, 366.0}) {
    LfmcObservation o{0.3, 295, doy, {}};
    EXPECT_NEAR(lfmc_linear_predictor(sum, o), lfmc_linear_predictor(c1, o) + lfmc_linear_predictor(c2, o), 1e-12);
  }
}

TEST(PredictLfmc, SeasonalTermsArePeriodic) {
  // DOY wraps with period 365: day 1 of next year sits where day 366 would.
  const LfmcCoefficients c{100, 0, 0, 10, -5};
  LfmcObservation a{0.5, 300, 1, {}};
  const double phase_366 = kTwoPi * 366.0 / 365.0;
  EXPECT_NEAR(lfmc_linear_predictor(c, a), 100 + 10 * std::sin(phase_366) - 5 * std::cos(phase_366), 1e-12);
  const double gap = std::fabs(lfmc_linear_predictor(c, {0.5, 300, 365, {}}) - lfmc_linear_predictor(c, a));
  EXPECT_LE(gap, 10 * std::fabs(std::sin(kTwoPi / 365)) + 5 * std::fabs(1 - std::cos(kTwoPi / 365)) + 1e-12);
}

TEST(CalibrateLfmc, NoiselessRecovery) {
  auto rows = synth(kTruth, 50, 1);
  LfmcFit fit = calibrate_lfmc(rows);
  expect_coefficients_near(fit.coefficients, kTruth, 1e-6);
  EXPECT_NEAR(fit.report.r2, 1.0, 1e-12);
  EXPECT_LT(fit.report.rmse, 1e-8);
  EXPECT_TRUE(fit.report.warnings.empty());
}

TEST(CalibrateLfmc, AgreesWithGradientDescentOracle) {
  auto rows = synth(kTruth, 40, 7, 5.0);
  LfmcFit fit = calibrate_lfmc(rows);

  // Plain gradient descent on standardized features, run to convergence.
  const std::size_t n = rows.size();
  std::vector<std::array<double, 5>> x(n);
  std::array<double, 5> mu{}, sd{};
  for (std::size_t i = 0; i < n; ++i) {
    const double ph = kTwoPi * rows[i].doy / 365.0;
    x[i] = {1.0, rows[i].ndvi, rows[i].lst, std::sin(ph), std::cos(ph)};
  }
  for (int j = 1; j < 5; ++j) {
    for (auto& r : x) mu[j] += r[j] / n;
    for (auto& r : x) sd[j] += (r[j] - mu[j]) * (r[j] - mu[j]) / n;
    sd[j] = std::sqrt(sd[j]);
    for (auto& r : x) r[j] = (r[j] - mu[j]) / sd[j];
  }
  std::array<double, 5> w{};
  for (int it = 0; it < 200000; ++it) {
    std::array<double, 5> g{};
    for (std::size_t i = 0; i < n; ++i) {
      double e = -*rows[i].lfmc;
      for (int j = 0; j < 5; ++j) e += w[j] * x[i][j];
      for (int j = 0; j < 5; ++j) g[j] += e * x[i][j] / n;
    }
    for (int j = 0; j < 5; ++j) w[j] -= 0.1 * g[j];
  }
  LfmcCoefficients gd{w[0], w[1] / sd[1], w[2] / sd[2], w[3] / sd[3], w[4] / sd[4]};
  gd.intercept_a -= gd.ndvi_b * mu[1] + gd.lst_c * mu[2] + gd.season_d1 * mu[3] + gd.season_d2 * mu[4];
  expect_coefficients_near(fit.coefficients, gd, 1e-5);
}

TEST(CalibrateLfmc, LocalOptimalityProbe) {
  auto rows = synth(kTruth, 60, 3, 5.0);
  LfmcFit fit = calibrate_lfmc(rows);
  const double base = sse(fit.coefficients, rows);
  for (int j = 0; j < 5; ++j)
    for (double d : {-1e-3, 1e-3}) {
      LfmcCoefficients c = fit.coefficients;
      double* fields[] = {&c.intercept_a, &c.ndvi_b, &c.lst_c, &c.season_d1, &c.season_d2};
      *fields[j] += d;
      EXPECT_GE(sse(c, rows), base) << "coefficient " << j << " delta " << d;
    }
}

TEST(CalibrateLfmc, NoisyRmseMonteCarlo) {
  for (unsigned seed = 100; seed < 120; ++seed) {
    LfmcFit fit = calibrate_lfmc(synth(kTruth, 200, seed, 5.0));
    EXPECT_GE(fit.report.rmse, 3.5) << "seed " << seed;
    EXPECT_LE(fit.report.rmse, 6.5) << "seed " << seed;
  }
}

TEST(CalibrateLfmc, ConstantDoyIsRankDeficient) {
  auto rows = synth(kTruth, 20, 2);
  for (auto& o : rows) {
    o.doy = 150;
    o.lfmc = lfmc_linear_predictor(kTruth, o);
  }
  try {
    calibrate_lfmc(rows);
    FAIL();
  } catch (const SingularFitError& e) {
    EXPECT_NE(std::string(e.what()).find("season_sin"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("intercept"), std::string::npos) << e.what();
  }
}

TEST(CalibrateLfmc, TooFewRowsAndSignWarnings) {
  EXPECT_THROW(calibrate_lfmc(synth(kTruth, 4, 1)), ValidationError);
  LfmcFit fit = calibrate_lfmc(synth({80, -10, 0.3, 0, 0}, 30, 4));
  EXPECT_EQ(fit.report.warnings.size(), 2u);
}

TEST(CalibrateLfmcStratified, IndependentStrata) {
  const LfmcCoefficients other{120, 30, -0.3, -4, 8};
  std::vector<LabeledObservation> rows;
  for (const auto& o : synth(kTruth, 20, 5)) rows.push_back({"north", o});
  for (const auto& o : synth(other, 20, 6)) rows.push_back({"south", o});
  auto fits = calibrate_lfmc_stratified(rows);
  ASSERT_EQ(fits.size(), 2u);
  expect_coefficients_near(fits.at("north").coefficients, kTruth, 1e-6);
  expect_coefficients_near(fits.at("south").coefficients, other, 1e-6);
}

TEST(CalibrateLfmcStratified, IdenticalDataIdenticalFits) {
  std::vector<LabeledObservation> rows;
  for (const auto& o : synth(kTruth, 15, 8, 3.0)) {
    rows.push_back({"a", o});
    rows.push_back({"b", o});
  }
  auto fits = calibrate_lfmc_stratified(rows);
  expect_coefficients_near(fits.at("a").coefficients, fits.at("b").coefficients, 0.0);
}

TEST(CalibrateLfmcStratified, UnderpopulatedStratumNamed) {
  std::vector<LabeledObservation> rows;
  for (const auto& o : synth(kTruth, 10, 5)) rows.push_back({"big", o});
  for (const auto& o : synth(kTruth, 3, 6)) rows.push_back({"tiny", o});
  try {
    calibrate_lfmc_stratified(rows);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("'tiny'"), std::string::npos);
  }
}

TEST(CrossValidateLfmc, NoiselessFoldsAreExact) {
  std::vector<LabeledObservation> rows;
  auto data = synth(kTruth, 30, 9);
  for (std::size_t i = 0; i < data.size(); ++i) rows.push_back({"r" + std::to_string(i % 3), data[i]});
  auto folds = cross_validate_lfmc(rows);
  ASSERT_EQ(folds.size(), 3u);
  for (const auto& f : folds) {
    EXPECT_LE(f.out_of_fold.rmse, 1e-6) << f.fold;
    EXPECT_EQ(f.train_rows, 20u);
  }
}

TEST(CrossValidateLfmc, TransferGapBetweenDifferentModels) {
  const LfmcCoefficients other{150, -20, -0.5, 20, 15};
  std::vector<LabeledObservation> rows;
  for (const auto& o : synth(kTruth, 30, 10, 2.0)) rows.push_back({"east", o});
  for (const auto& o : synth(other, 30, 11, 2.0)) rows.push_back({"west", o});
  for (const auto& f : cross_validate_lfmc(rows)) EXPECT_LT(f.out_of_fold.r2, f.in_fold.r2) << f.fold;
}

TEST(CrossValidateLfmc, Errors) {
  std::vector<LabeledObservation> rows;
  for (const auto& o : synth(kTruth, 10, 12)) rows.push_back({"only", o});
  EXPECT_THROW(cross_validate_lfmc(rows), ValidationError);
  rows.push_back({"other", synth(kTruth, 1, 13)[0]});
  // Fold "only" leaves just one training row.
  EXPECT_THROW(cross_validate_lfmc(rows), ValidationError);
}
