#include <gtest/gtest.h>

#include <random>

#include "firefront/ros_correction.hpp"

using namespace firefront;

namespace {

const SatReference kRef{2.0, 4.0, 8.0};
const RosModelParams kParams{1.0, 0.70, 0.039, kDefaultMoistureCutoff};

std::vector<RosObservation> synth(const RosModelParams& p, std::size_t n, unsigned seed, double log_noise = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> wind(0.5, 12.0), moist(2.0, 40.0);
  std::normal_distribution<double> eps(0.0, log_noise > 0 ? log_noise : 1.0);
  std::vector<RosObservation> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RosObservation o{0, wind(rng), moist(rng)};
    o.ros = base_ros(p, o.wind, o.moisture) * (log_noise > 0 ? std::exp(eps(rng)) : 1.0);
    rows.push_back(o);
  }
  return rows;
}

}  // namespace

TEST(BaseRos, Examples) {
  EXPECT_DOUBLE_EQ(base_ros({1, 1, 0, 120}, 3.7, 50), 3.7);
  EXPECT_DOUBLE_EQ(base_ros({2, 0.7, 0.039, 120}, 4, 120), 0.0);
  EXPECT_DOUBLE_EQ(base_ros({2, 0.7, 0.039, 120}, 4, 500), 0.0);
  const long double expect = 2.0L * std::pow(4.0L, 0.7L) * std::exp(-0.312L);
  EXPECT_NEAR(base_ros({2, 0.7, 0.039, 120}, 4, 8), static_cast<double>(expect), 1e-14);
  EXPECT_DOUBLE_EQ(base_ros({2, 0.7, 0.039, 120}, 0, 8), 0.0);
  EXPECT_THROW(base_ros(kParams, -1, 8), ValidationError);
}

TEST(CorrectRos, TableThreeFullGrid) {
  const double winds[] = {2, 4, 6, 8};
  const double moistures[] = {6, 8, 10, 12};
  const double table[4][4] = {{1.331, 1.231, 1.139, 1.053},
                              {2.162, 2.000, 1.850, 1.711},
                              {2.872, 2.656, 2.457, 2.273},
                              {3.513, 3.249, 3.005, 2.780}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_NEAR(correct_ros(kRef, kParams, winds[i], moistures[j]), table[i][j], 0.0005)
          << "U=" << winds[i] << " M=" << moistures[j];
}

TEST(CorrectRos, IdentityCutoffAndZeroWind) {
  EXPECT_DOUBLE_EQ(correct_ros(kRef, kParams, kRef.wind_sat, kRef.moisture_sat), kRef.ros_thermal);
  EXPECT_DOUBLE_EQ(correct_ros(kRef, kParams, 5, 120), 0.0);
  EXPECT_DOUBLE_EQ(correct_ros(kRef, kParams, 0, 8), 0.0);
  EXPECT_THROW(correct_ros({2, 0, 8}, kParams, 4, 8), ValidationError);
  EXPECT_THROW(correct_ros(kRef, kParams, -0.1, 8), ValidationError);
}

TEST(CorrectRos, MonotoneInWindAndMoisture) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> w(0.1, 15), m(0, 100);
  for (int k = 0; k < 500; ++k) {
    const double u1 = w(rng), u2 = w(rng), m1 = m(rng), m2 = m(rng);
    if (u1 != u2) {
      EXPECT_EQ(correct_ros(kRef, kParams, u1, 20) < correct_ros(kRef, kParams, u2, 20), u1 < u2);
    }
    if (m1 != m2) {
      EXPECT_EQ(correct_ros(kRef, kParams, 5, m1) > correct_ros(kRef, kParams, 5, m2), m1 < m2);
    }
  }
}

TEST(CorrectRos, CompositionThroughIntermediate) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> w(0.5, 15), m(0, 80);
  for (int k = 0; k < 200; ++k) {
    const double um = w(rng), mm = m(rng), ur = w(rng), mr = m(rng);
    const double mid = correct_ros(kRef, kParams, um, mm);
    const double chained = correct_ros({mid, um, mm}, kParams, ur, mr);
    const double direct = correct_ros(kRef, kParams, ur, mr);
    EXPECT_NEAR(chained, direct, 1e-12 * direct);
  }
}

TEST(CalibrateRos, NoiselessRecovery) {
  const RosModelParams truth{2.0, 0.7, 0.039, 120};
  RosCalibration cal = calibrate_ros(synth(truth, 20, 1));
  EXPECT_NEAR(cal.params.scale_a, 2.0, 2e-9);
  EXPECT_NEAR(cal.params.wind_exp_alpha, 0.7, 0.7e-9);
  EXPECT_NEAR(cal.params.moist_coef_beta, 0.039, 0.039e-9);
  EXPECT_DOUBLE_EQ(cal.params.m_min, kDefaultMoistureCutoff);
  EXPECT_NEAR(cal.report.r2, 1.0, 1e-12);
  EXPECT_TRUE(cal.report.warnings.empty());
}

TEST(CalibrateRos, NoisyAlphaWithinTolerance) {
  const RosModelParams truth{2.0, 0.7, 0.039, 120};
  for (unsigned seed = 30; seed < 50; ++seed) {
    RosCalibration cal = calibrate_ros(synth(truth, 60, seed, 0.1));
    EXPECT_NEAR(cal.params.wind_exp_alpha, 0.7, 0.1) << "seed " << seed;
  }
}

TEST(CalibrateRos, Errors) {
  auto rows = synth(kParams, 10, 2);
  for (auto& r : rows) r.wind = 5;
  try {
    calibrate_ros(rows);
    FAIL();
  } catch (const SingularFitError& e) {
    EXPECT_NE(std::string(e.what()).find("ln_wind"), std::string::npos) << e.what();
  }
  auto flat_m = synth(kParams, 10, 3);
  for (auto& r : flat_m) r.moisture = 12;
  EXPECT_THROW(calibrate_ros(flat_m), SingularFitError);
  auto bad = synth(kParams, 10, 4);
  bad[3].ros = 0;
  EXPECT_THROW(calibrate_ros(bad), ValidationError);
  EXPECT_THROW(calibrate_ros(synth(kParams, 2, 5)), ValidationError);
}

TEST(ParamsFromLiterature, Ranges) {
  auto g = params_from_literature("grass", "dry");
  EXPECT_DOUBLE_EQ(g.alpha.lo, 1.0);
  EXPECT_DOUBLE_EQ(g.alpha.hi, 1.5);
  EXPECT_DOUBLE_EQ(g.beta.lo, 0.05);
  EXPECT_DOUBLE_EQ(g.beta.hi, 0.1);
  auto f = params_from_literature("forest-litter", "live-green");
  EXPECT_DOUBLE_EQ(f.alpha.lo, 0.3);
  EXPECT_DOUBLE_EQ(f.alpha.hi, 0.8);
  EXPECT_DOUBLE_EQ(f.beta.lo, 0.15);
  EXPECT_DOUBLE_EQ(f.beta.hi, 0.25);
  auto s = params_from_literature("shrub", "moderate");
  EXPECT_TRUE(s.alpha.contains(1.0));
  EXPECT_TRUE(s.beta.contains(0.12));
  EXPECT_THROW(params_from_literature("swamp", "dry"), ValidationError);
  EXPECT_THROW(params_from_literature("grass", "soggy"), ValidationError);
}

TEST(CorrectRosRange, BracketsEveryInteriorChoice) {
  auto range = params_from_literature("shrub", "dry");
  Interval out = correct_ros_range(kRef, range, 6, 12);
  EXPECT_LT(out.lo, out.hi);
  for (double a = 0.8; a <= 1.2; a += 0.05)
    for (double b = 0.05; b <= 0.1; b += 0.01) {
      const double v = correct_ros(kRef, {1, a, b, 120}, 6, 12);
      EXPECT_TRUE(out.contains(v) || std::fabs(v - out.lo) < 1e-12 || std::fabs(v - out.hi) < 1e-12);
    }
}
