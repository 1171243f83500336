#include <cmath>

#include <gtest/gtest.h>

#include "edwing/structure.hpp"
#include "oracles.hpp"

using namespace edwing;

namespace {
// Tip deflection of a clamped beam of length l: a point load P at s gives
// P s^2 (3l - s) / (6 EI) at the tip; superpose over the distribution.
double tip_deflection_oracle(double lift, double span, double ei) {
  double const l = 0.5 * span;
  return oracle::integrate_sqrt_tip(
             [&](double s) {
               double const u = s / l;
               double const f = 0.5 * (lift / span + 4.0 * lift / (oracle::pi * span) * std::sqrt(std::max(0.0, 1 - u * u)));
               return f * s * s * (3 * l - s) / 6.0;
             },
             0.0, l) /
         ei;
}
}  // namespace

TEST(Schrenk, PrototypeValues) {
  EXPECT_NEAR(schrenk_intercept(2.884, 0.6788), 5.409580, 5e-6);
  auto const d = schrenk_distribution({2.884, 0.6788, 256});
  EXPECT_NEAR(d.samples.front().f, 4.829127, 5e-6);
  EXPECT_NEAR(d.samples.back().f, 2.124337, 5e-6);
  EXPECT_EQ(d.samples.back().x, 0.5 * 0.6788);
  EXPECT_NEAR(integrate_halfspan(d), 1.442, 0.0005);
}

TEST(Schrenk, ZeroLiftAndLinearity) {
  auto const zero = schrenk_distribution({0.0, 0.6788, 128});
  for (auto const& s : zero.samples) EXPECT_EQ(s.f, 0.0);
  auto const one = schrenk_distribution({1.0, 0.6788, 128});
  auto const two = schrenk_distribution({2.0, 0.6788, 128});
  for (std::size_t i = 0; i < one.samples.size(); ++i) EXPECT_NEAR(two.samples[i].f, 2.0 * one.samples[i].f, 1e-14);
}

TEST(Schrenk, Errors) {
  EXPECT_THROW(schrenk_distribution({2.884, 0.0, 256}), InvalidArgument);
  EXPECT_THROW(schrenk_distribution({-1.0, 0.6788, 256}), InvalidArgument);
  EXPECT_THROW(schrenk_distribution({2.884, 0.6788, 63}), InvalidArgument);
  EXPECT_THROW(schrenk_distribution({2.884, 0.6788, 65}), InvalidArgument);
}

TEST(Schrenk, HalfSpanIntegralIsHalfTheLiftProperty) {
  for (int i = 0; i < 1000; ++i) {
    double const lift = oracle::log_uniform(0.01, 100.0), span = oracle::log_uniform(0.1, 5.0);
    std::size_t const n = 64 + 2 * static_cast<std::size_t>(oracle::uniform(0, 200));
    auto const d = schrenk_distribution({lift, span, n});
    ASSERT_NEAR(integrate_halfspan(d) / (0.5 * lift), 1.0, 1e-6) << lift << " " << span << " " << n;
  }
}

TEST(Schrenk, QuadratureAgreesWithSubstitutionOracle) {
  double const lift = 2.884, span = 0.6788;
  double const ref = oracle::integrate_sqrt_tip([&](double x) { return schrenk_load(x, lift, span); }, 0.0, 0.5 * span);
  EXPECT_NEAR(integrate_halfspan(schrenk_distribution({lift, span, 256})), ref, 1e-6 * ref);
}

TEST(Strength, PrototypeMargins) {
  auto const pass = strength_margin(1.56, 2.884);
  EXPECT_NEAR(pass.required_half_lift, 1.442, 1e-12);
  EXPECT_NEAR(pass.margin, 1.082, 0.0005);
  EXPECT_NEAR(pass.full_span_capacity_in_wg, 1.08, 0.005);
  EXPECT_TRUE(pass.pass);

  auto const fail = strength_margin(1.04, 2.884);
  EXPECT_NEAR(fail.margin, 0.7212, 0.0005);
  EXPECT_FALSE(fail.pass);

  EXPECT_TRUE(strength_margin(1.442, 2.884).pass);
  EXPECT_THROW(strength_margin(1.56, 0.0), InvalidArgument);
  EXPECT_THROW(strength_margin(0.0, 2.884), InvalidArgument);
}

TEST(Strength, EmptyWeightRatio) {
  EXPECT_NEAR(empty_weight_ratio_check(1.56, 0.2141 * 9.81), 0.743, 0.001);
  EXPECT_THROW(empty_weight_ratio_check(1.56, 0.0), InvalidArgument);
}

TEST(Deflection, UniformLoadClosedForm) {
  auto const d = cantilever_deflection(uniform_distribution(1.0, 1.0, 256), 1.0);
  EXPECT_NEAR(d.tip_deflection, 0.125, 0.125e-4);
  EXPECT_EQ(d.flexural_rigidity_used, 1.0);
  EXPECT_EQ(cantilever_deflection(uniform_distribution(0.0, 1.0, 256), 1.0).tip_deflection, 0.0);
  EXPECT_NEAR(cantilever_deflection(uniform_distribution(2.0, 0.5, 256), 3.0).tip_deflection,
              2.0 * std::pow(0.5, 4) / (8.0 * 3.0), 1e-4 * 2.0 * std::pow(0.5, 4) / 24.0);
}

TEST(Deflection, SchrenkAgainstSuperpositionOracle) {
  double const ei = 5.0;
  auto const d = cantilever_deflection(schrenk_distribution({2.884, 0.6788, 256}), ei);
  double const ref = tip_deflection_oracle(2.884, 0.6788, ei);
  EXPECT_NEAR(d.tip_deflection / ref, 1.0, 1e-3);
  EXPECT_GT(d.tip_deflection, 0.0);
}

TEST(Deflection, InverseInRigidityAndConvergesUnderRefinement) {
  auto const dist = schrenk_distribution({2.884, 0.6788, 256});
  EXPECT_NEAR(cantilever_deflection(dist, 10.0).tip_deflection, 0.5 * cantilever_deflection(dist, 5.0).tip_deflection,
              1e-15);
  double const coarse = cantilever_deflection(dist, 5.0).tip_deflection;
  double const fine = cantilever_deflection(schrenk_distribution({2.884, 0.6788, 4096}), 5.0).tip_deflection;
  EXPECT_NEAR(coarse / fine, 1.0, 1e-3);
  EXPECT_THROW(cantilever_deflection(dist, 0.0), InvalidArgument);
}

TEST(BagPlan, StationsSumToHalfLift) {
  auto const dist = schrenk_distribution({2.884, 0.6788, 256});
  for (std::size_t n : {1u, 2u, 4u, 7u}) {
    auto const plan = bag_load_plan(dist, n, 9.81);
    ASSERT_EQ(plan.size(), n);
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      total += plan[k].mass;
      if (k > 0) {
        EXPECT_EQ(plan[k].x_begin, plan[k - 1].x_end);
        EXPECT_LT(plan[k].mass, plan[k - 1].mass);
      }
    }
    EXPECT_EQ(plan.front().x_begin, 0.0);
    EXPECT_EQ(plan.back().x_end, 0.5 * 0.6788);
    EXPECT_NEAR(total * 9.81 / 1.442, 1.0, 1e-6) << n;
  }
  EXPECT_NEAR(bag_load_plan(dist, 1, 9.81).front().mass, 0.14700, 5e-5);
}

TEST(BagPlan, StationsMatchOracle) {
  double const lift = 2.884, span = 0.6788, half = 0.5 * span;
  auto const plan = bag_load_plan(schrenk_distribution({lift, span, 256}), 4, 9.81);
  for (auto const& st : plan) {
    double const ref =
        oracle::integrate_sqrt_tip([&](double x) { return schrenk_load(x, lift, span); }, st.x_begin, half) -
        (st.x_end < half ? oracle::integrate_sqrt_tip([&](double x) { return schrenk_load(x, lift, span); }, st.x_end, half)
                         : 0.0);
    EXPECT_NEAR(st.mass * 9.81, ref, 1e-6 * 1.442);
  }
}

TEST(BagPlan, Errors) {
  auto const dist = schrenk_distribution({2.884, 0.6788, 256});
  EXPECT_THROW(bag_load_plan(dist, 0, 9.81), InvalidArgument);
  EXPECT_THROW(bag_load_plan(uniform_distribution(1.0, 0.5, 256), 4, 9.81), InvalidArgument);
}
