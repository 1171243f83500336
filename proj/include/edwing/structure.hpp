#pragma once
/*
  Spanwise loading and structural checks for one half wing.

  Schrenk's approximation averages a rectangular and an elliptic loading that
  carry the same lift. With x measured from the root,

      F(x) = 1/2 (L/b + f0 sqrt(1 - (x / (b/2))^2)),   f0 = 4 L / (pi b),

  which integrates to L/2 over [0, b/2]. L is the full-span lift (W g for
  level flight), so each half wing has to carry 0.5 W g.
*/

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "edwing/error.hpp"
#include "edwing/numeric.hpp"
#include "edwing/units.hpp"

namespace edwing {

inline constexpr std::size_t min_load_samples = 64;

struct LoadCase {
  double total_lift = 0.0;  // N, full span
  double span = 0.0;        // m
  std::size_t sample_count = 256;  // intervals over the half span

  void validate() const {
    detail::require(total_lift >= 0.0, "load case: total lift must be >= 0");
    detail::require(span > 0.0, "load case: span must be > 0");
    detail::require(sample_count >= min_load_samples && sample_count % 2 == 0,
                    "load case: sample count must be even and >= 64");
  }
};

struct LoadSample {
  double x = 0.0;  // m from the root
  double f = 0.0;  // N/m
};

struct LoadDistribution {
  double intercept = 0.0;  // f0, N/m
  std::vector<LoadSample> samples;
  LoadCase load_case;

  double half_span() const { return 0.5 * load_case.span; }
  double step() const { return half_span() / static_cast<double>(samples.size() - 1); }

  std::vector<double> values() const {
    std::vector<double> v(samples.size());
    std::transform(samples.begin(), samples.end(), v.begin(), [](auto const& s) { return s.f; });
    return v;
  }
};

struct StrengthReport {
  double required_half_lift = 0.0;   // N, 0.5 W g
  double capacity_half_lift = 0.0;   // N
  double margin = 0.0;               // capacity / required
  double full_span_capacity_in_wg = 0.0;
  bool pass = false;
};

struct DeflectionResult {
  double tip_deflection = 0.0;       // m, positive in the load direction
  double flexural_rigidity_used = 0.0;  // N m^2
};

struct BagStation {
  double x_begin = 0.0;  // m
  double x_end = 0.0;    // m
  double mass = 0.0;     // kg
};

inline double schrenk_intercept(double total_lift, double span) {
  return 4.0 * total_lift / (units::pi * span);
}

/// Schrenk loading at x in [0, b/2].
inline double schrenk_load(double x, double total_lift, double span) {
  double const u = x / (0.5 * span);
  double const elliptic = std::sqrt(std::max(0.0, 1.0 - u * u));
  return 0.5 * (total_lift / span + schrenk_intercept(total_lift, span) * elliptic);
}

/// Uniformly spaced samples of the Schrenk loading over the half span,
/// sample_count intervals, both endpoints included. The tip sample is set
/// from the rectangular term alone.
inline LoadDistribution schrenk_distribution(LoadCase const& c) {
  c.validate();
  LoadDistribution d;
  d.load_case = c;
  d.intercept = schrenk_intercept(c.total_lift, c.span);
  double const half = 0.5 * c.span;
  d.samples.resize(c.sample_count + 1);
  for (std::size_t i = 0; i <= c.sample_count; ++i) {
    double const x = (i == c.sample_count) ? half : half * static_cast<double>(i) / static_cast<double>(c.sample_count);
    d.samples[i] = {x, i == c.sample_count ? 0.5 * c.total_lift / c.span : schrenk_load(x, c.total_lift, c.span)};
  }
  return d;
}

/// Lift carried by the half wing. Composite Simpson with a square-root
/// correction on the last two intervals, where the elliptic term has an
/// infinite slope.
inline double integrate_halfspan(LoadDistribution const& d) {
  if (d.samples.size() < 3 || (d.samples.size() - 1) % 2 != 0)
    throw InvalidArgument("integrate_halfspan: interval count must be even");
  auto const f = d.values();
  return numeric::simpson_sqrt_tip(f, d.step());
}

/// A half wing must carry 0.5 W g. The margin is capacity over that
/// requirement, which is also the full-span capacity as a multiple of W g.
inline StrengthReport strength_margin(double capacity_half_lift, double gross_weight) {
  detail::require(gross_weight > 0.0, "strength_margin: weight must be > 0");
  detail::require(capacity_half_lift > 0.0, "strength_margin: capacity must be > 0");
  StrengthReport r;
  r.required_half_lift = 0.5 * gross_weight;
  r.capacity_half_lift = capacity_half_lift;
  r.margin = capacity_half_lift / r.required_half_lift;
  r.full_span_capacity_in_wg = 2.0 * capacity_half_lift / gross_weight;
  r.pass = r.margin >= 1.0;
  return r;
}

/// Half-wing capacity as a fraction of the empty (no payload) weight.
inline double empty_weight_ratio_check(double capacity_half_lift, double empty_weight) {
  detail::require(empty_weight > 0.0, "empty_weight_ratio_check: empty weight must be > 0");
  detail::require(capacity_half_lift > 0.0, "empty_weight_ratio_check: capacity must be > 0");
  return capacity_half_lift / empty_weight;
}

/// Tip deflection of a root-clamped Euler-Bernoulli beam of length b/2 under
/// the sampled load. Shear and bending moment are accumulated inward from the
/// free tip, slope and deflection outward from the clamp, all with the
/// trapezoid rule on the sample grid.
inline DeflectionResult cantilever_deflection(LoadDistribution const& d, double flexural_rigidity) {
  detail::require(flexural_rigidity > 0.0, "cantilever_deflection: flexural rigidity must be > 0");
  detail::require(d.samples.size() >= 2, "cantilever_deflection: need at least two samples");
  double const h = d.step();
  auto f = d.values();

  // V(x) = int_x^l F, M(x) = int_x^l V: integrate the reversed profile.
  std::reverse(f.begin(), f.end());
  auto shear = numeric::cumulative_trapezoid(f, h);
  auto moment = numeric::cumulative_trapezoid(shear, h);
  std::reverse(moment.begin(), moment.end());

  for (auto& m : moment) m /= flexural_rigidity;
  auto const slope = numeric::cumulative_trapezoid(moment, h);
  auto const deflection = numeric::cumulative_trapezoid(slope, h);
  return {deflection.back(), flexural_rigidity};
}

/// Uniform load of `w` N/m over a half span of `length`, packaged as a
/// distribution so that it can go through the same beam routine.
inline LoadDistribution uniform_distribution(double w, double length, std::size_t sample_count = 256) {
  detail::require(w >= 0.0 && length > 0.0 && sample_count >= 2, "uniform_distribution: invalid input");
  LoadDistribution d;
  d.load_case = {2.0 * w * length, 2.0 * length, sample_count};
  d.samples.resize(sample_count + 1);
  for (std::size_t i = 0; i <= sample_count; ++i)
    d.samples[i] = {length * static_cast<double>(i) / static_cast<double>(sample_count), w};
  return d;
}

/// Splits the half span into equal stations and converts the lift on each
/// into the mass of a sand bag that reproduces it. Station lifts come from
/// the Schrenk law of the distribution's load case, not from the samples, so
/// station edges need not fall on the sample grid.
inline std::vector<BagStation> bag_load_plan(LoadDistribution const& d, std::size_t station_count,
                                             double gravity = 9.81) {
  detail::require(station_count >= 1, "bag_load_plan: need at least one station");
  detail::require(gravity > 0.0, "bag_load_plan: gravity must be > 0");
  auto const& c = d.load_case;
  c.validate();
  if (std::abs(d.intercept - schrenk_intercept(c.total_lift, c.span)) > 1e-12 * (1.0 + d.intercept))
    throw InvalidArgument("bag_load_plan: distribution is not a Schrenk loading");
  double const half = 0.5 * c.span;

  // Each station is integrated on its own fine grid; the last one ends at the
  // tip and takes the square-root correction.
  constexpr std::size_t per_station = 256;
  std::vector<BagStation> plan;
  plan.reserve(station_count);
  for (std::size_t k = 0; k < station_count; ++k) {
    double const x0 = half * static_cast<double>(k) / static_cast<double>(station_count);
    double const x1 = (k + 1 == station_count) ? half
                                               : half * static_cast<double>(k + 1) / static_cast<double>(station_count);
    double const h = (x1 - x0) / static_cast<double>(per_station);
    std::vector<double> f(per_station + 1);
    for (std::size_t i = 0; i <= per_station; ++i) {
      double const x = (i == per_station) ? x1 : x0 + h * static_cast<double>(i);
      f[i] = (k + 1 == station_count && i == per_station) ? 0.5 * c.total_lift / c.span
                                                         : schrenk_load(x, c.total_lift, c.span);
    }
    double const lift = (k + 1 == station_count) ? numeric::simpson_sqrt_tip(f, h) : numeric::simpson(f, h);
    plan.push_back({x0, x1, lift / gravity});
  }
  return plan;
}

}  // namespace edwing
