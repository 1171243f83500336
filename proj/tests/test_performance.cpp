#include <cmath>

#include <gtest/gtest.h>

#include "edwing/performance.hpp"
#include "oracles.hpp"

using namespace edwing;

TEST(CruiseThrustToWeight, SpecimenValue) {
  EXPECT_NEAR(cruise_thrust_to_weight(2.88, 0.105634, 4.354, 0.9222, 9.43, 0.045), 0.130, 0.003);
}

TEST(CruiseThrustToWeight, InducedTermOnly) {
  EXPECT_NEAR(cruise_thrust_to_weight(2.88, 0.105634, 4.354, 0.9222, 9.43, 0.0), 0.0397, 5e-5);
}

TEST(CruiseThrustToWeight, TermwiseHomogeneityInWeight) {
  double const w = 2.88, s = 0.105634, ar = 4.354, e = 0.9222, v = 9.43;
  double const induced = cruise_thrust_to_weight(w, s, ar, e, v, 0.0);
  double const parasite = cruise_thrust_to_weight(w, s, ar, e, v, 0.045) - induced;
  EXPECT_NEAR(cruise_thrust_to_weight(2 * w, s, ar, e, v, 0.045), 0.5 * parasite + 2.0 * induced, 1e-14);
}

TEST(CruiseThrustToWeight, Errors) {
  EXPECT_THROW(cruise_thrust_to_weight(0.0, 0.1, 4, 0.9, 9, 0.045), InvalidArgument);
  EXPECT_THROW(cruise_thrust_to_weight(2.0, 0.0, 4, 0.9, 9, 0.045), InvalidArgument);
  EXPECT_THROW(cruise_thrust_to_weight(2.0, 0.1, 4, 0.9, 0.0, 0.045), InvalidArgument);
}

TEST(CruiseThrustToWeight, NeverBelowAnalyticMinimumAndScaleInvariant) {
  for (int i = 0; i < 1000; ++i) {
    double const w = oracle::uniform(0.5, 50), s = oracle::uniform(0.02, 2), ar = oracle::uniform(1, 20),
                 v = oracle::uniform(2, 40), cd = oracle::uniform(0.01, 0.1);
    double const e = 1.78 * (1 - 0.045 * std::pow(ar, 0.68)) - 0.64;
    double const tw = cruise_thrust_to_weight(w, s, ar, e, v, cd);
    EXPECT_GE(tw, minimum_cruise_thrust_to_weight(ar, e, cd) * (1 - 1e-12));
    double const k = oracle::uniform(0.1, 10);
    EXPECT_NEAR(cruise_thrust_to_weight(k * w, k * s, ar, e, v, cd), tw, 1e-12 * tw);
  }
}

TEST(CruiseThrustToWeight, MinimumIsAttainedAtOptimalDynamicPressure) {
  double const w = 2.88, s = 0.105634, ar = 4.354, e = 0.9222, cd = 0.045, rho = 1.225;
  double const q_star = (w / s) * std::sqrt(1.0 / (oracle::pi * ar * e * cd));
  double const v_star = std::sqrt(2 * q_star / rho);
  EXPECT_NEAR(cruise_thrust_to_weight(w, s, ar, e, v_star, cd), minimum_cruise_thrust_to_weight(ar, e, cd), 1e-12);
}

TEST(ThrustMatch, Reciprocal) {
  EXPECT_NEAR(thrust_match_tw(6.2), 0.1613, 5e-5);
  EXPECT_EQ(thrust_match_tw(1.0), 1.0);
  EXPECT_NEAR(thrust_match_tw(7.0), 0.1429, 5e-5);
  EXPECT_THROW(thrust_match_tw(0.0), InvalidArgument);
}

TEST(MaxThrustToWeight, Examples) {
  EXPECT_NEAR(max_thrust_to_weight(1.079, 2.884), 0.374, 0.0005);
  EXPECT_EQ(max_thrust_to_weight(2.884, 2.884), 1.0);
  EXPECT_EQ(max_thrust_to_weight(0.0, 2.884), 0.0);
  EXPECT_THROW(max_thrust_to_weight(1.0, 0.0), InvalidArgument);
}

TEST(ThrustMargin, SpecimenMarginsPass) {
  auto const r = check_thrust_margin(0.374, {0.130, 0.161});
  ASSERT_EQ(r.margins.size(), 2u);
  EXPECT_NEAR(r.margins[0], 2.88, 0.005);
  EXPECT_NEAR(r.margins[1], 2.32, 0.005);
  EXPECT_TRUE(r.pass);
}

TEST(ThrustMargin, BoundaryAndShortfallFail) {
  auto const boundary = check_thrust_margin(0.374, {0.374});
  EXPECT_EQ(boundary.margins[0], 1.0);
  EXPECT_FALSE(boundary.pass);
  auto const short_ = check_thrust_margin(0.1, {0.13});
  EXPECT_NEAR(short_.margins[0], 0.769, 0.0005);
  EXPECT_FALSE(short_.pass);
  EXPECT_THROW(check_thrust_margin(0.3, {0.1, 0.0}), InvalidArgument);
}
