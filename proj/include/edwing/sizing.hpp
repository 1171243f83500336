#pragma once
/*
  Conceptual sizing of a flat-plate wing whose area is fixed by the energy it
  has to carry.

  Pipeline:
    payload + payload ratio      -> gross mass
    nutrition / areal kcal       -> reference area S
    W/S, S, chord Reynolds number -> aspect ratio, chord, span, cruise speed
    W/S, AR, V_c                 -> smallest angle of attack keeping V_s <= V_c

  The cruise constraint is
      W/S = 1/2 rho V^2 sqrt(pi e AR C_D0),   e = 1.78 (1 - 0.045 AR^0.68) - 0.64
  and the finite-wing lift slope is the Lowry-Polhamus form
      C_L = 2 pi AR alpha / (2 + sqrt(4 + AR^2)).
*/

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "edwing/error.hpp"
#include "edwing/numeric.hpp"
#include "edwing/units.hpp"

namespace edwing {

struct EnvironmentSpec {
  double air_density = 1.225;     // kg/m^3
  double air_viscosity = 1.81e-5; // kg/(m s)
  double gravity = 9.81;          // m/s^2

  void validate() const {
    detail::require(air_density > 0.0 && air_viscosity > 0.0 && gravity > 0.0,
                    "environment: air density, viscosity and gravity must be > 0");
  }
};

struct DesignRequirements {
  double nutrition_target = 300.0;          // kcal
  double payload_mass = 0.080;              // kg
  double payload_ratio = 0.272;             // W_payload / W
  double target_re = 1e5;                   // chord Reynolds number
  double zero_lift_drag = 0.02;             // C_D0
  double areal_caloric_density = 2840.0;    // kcal/m^2

  void validate() const {
    detail::require(nutrition_target > 0.0, "requirements: nutrition target must be > 0");
    detail::require(payload_mass >= 0.0, "requirements: payload mass must be >= 0");
    detail::require(payload_ratio > 0.0 && payload_ratio <= 1.0,
                    "requirements: payload ratio must be in (0, 1]");
    detail::require(target_re > 0.0, "requirements: target Reynolds number must be > 0");
    detail::require(zero_lift_drag > 0.0, "requirements: C_D0 must be > 0");
    detail::require(areal_caloric_density > 0.0, "requirements: areal caloric density must be > 0");
  }
};

struct MassBudget {
  double payload_mass = 0.0;  // kg
  double empty_mass = 0.0;    // kg
  double gross_mass = 0.0;    // kg
  double gross_weight = 0.0;  // N
};

inline constexpr double default_plate_thickness = 5.80e-3;  // m
inline constexpr double default_dihedral_deg = 10.0;
inline constexpr double default_lift_drag_ratio = 6.2;
inline constexpr double linear_lift_alpha_limit_deg = 15.0;

struct WingGeometry {
  double reference_area = 0.0;  // m^2
  double aspect_ratio = 0.0;
  double span = 0.0;            // m
  double chord = 0.0;           // m
  double plate_thickness = default_plate_thickness;  // m
  double dihedral_deg = default_dihedral_deg;        // recorded only
};

struct AeroResult {
  double cruise_speed = 0.0;      // m/s
  double stall_speed = 0.0;       // m/s
  double critical_alpha = 0.0;    // rad
  double lift_coefficient = 0.0;  // C_Lmax at critical_alpha
  double oswald_factor = 0.0;
  double dynamic_pressure = 0.0;  // Pa
  double achieved_re = 0.0;
  double wing_loading = 0.0;      // N/m^2
  double lift_drag_ratio = default_lift_drag_ratio;
};

// --- mass and area ----------------------------------------------------------

inline MassBudget estimate_mass_budget(DesignRequirements const& req, EnvironmentSpec const& env) {
  env.validate();
  if (!(req.payload_mass > 0.0))
    throw InvalidArgument("estimate_mass_budget: payload mass must be > 0 for a ratio-based estimate");
  if (!(req.payload_ratio > 0.0 && req.payload_ratio <= 1.0))
    throw InvalidArgument("estimate_mass_budget: payload ratio must be in (0, 1]");
  MassBudget m;
  m.payload_mass = req.payload_mass;
  m.gross_mass = req.payload_mass / req.payload_ratio;
  m.empty_mass = m.gross_mass - m.payload_mass;
  m.gross_weight = m.gross_mass * env.gravity;
  return m;
}

/// kcal per m^2 of a glued plate: cookie mass per area times the energy of
/// the cookie plus the adhesive that comes with it (adhesive_ratio is
/// adhesive mass per unit cookie mass; 4:1 cookie:glue gives 0.25).
inline double areal_caloric_density(double cookie_density, double thickness, double cookie_kcal_per_kg,
                                    double adhesive_kcal_per_kg, double adhesive_ratio = 0.25) {
  detail::require(cookie_density >= 0.0 && thickness >= 0.0 && cookie_kcal_per_kg >= 0.0 &&
                      adhesive_kcal_per_kg >= 0.0 && adhesive_ratio >= 0.0,
                  "areal_caloric_density: inputs must be >= 0");
  return cookie_density * thickness * (cookie_kcal_per_kg + adhesive_ratio * adhesive_kcal_per_kg);
}

inline double wing_area_from_calories(double nutrition_kcal, double areal_density) {
  detail::require(areal_density > 0.0, "wing_area_from_calories: areal caloric density must be > 0");
  detail::require(nutrition_kcal >= 0.0, "wing_area_from_calories: nutrition must be >= 0");
  return nutrition_kcal / areal_density;
}

// --- aerodynamics -----------------------------------------------------------

inline double oswald_factor(double aspect_ratio) {
  detail::require(aspect_ratio > 0.0, "oswald_factor: aspect ratio must be > 0");
  return 1.78 * (1.0 - 0.045 * std::pow(aspect_ratio, 0.68)) - 0.64;
}

/// Wing loading sustainable in cruise at speed v for a given AR and C_D0.
inline double wing_loading_cruise(double cruise_speed, double aspect_ratio, double zero_lift_drag,
                                  EnvironmentSpec const& env = {}) {
  detail::require(cruise_speed >= 0.0, "wing_loading_cruise: speed must be >= 0");
  detail::require(zero_lift_drag > 0.0, "wing_loading_cruise: C_D0 must be > 0");
  double const e = oswald_factor(aspect_ratio);
  detail::require(e > 0.0, "wing_loading_cruise: Oswald factor is not positive at this aspect ratio");
  return 0.5 * env.air_density * cruise_speed * cruise_speed *
         std::sqrt(units::pi * e * aspect_ratio * zero_lift_drag);
}

/// Lift-curve slope dC_L/dalpha (per radian) of a rectangular wing.
inline double lift_slope_lp(double aspect_ratio) {
  detail::require(aspect_ratio > 0.0, "lift slope: aspect ratio must be > 0");
  return 2.0 * units::pi * aspect_ratio / (2.0 + std::sqrt(4.0 + aspect_ratio * aspect_ratio));
}

inline double lift_coefficient_lp(double alpha, double aspect_ratio) {
  return lift_slope_lp(aspect_ratio) * alpha;
}

inline double stall_speed(double wing_loading, double max_lift_coefficient, EnvironmentSpec const& env = {}) {
  detail::require(max_lift_coefficient > 0.0, "stall_speed: C_Lmax must be > 0");
  detail::require(wing_loading >= 0.0, "stall_speed: wing loading must be >= 0");
  return std::sqrt(2.0 * wing_loading / (env.air_density * max_lift_coefficient));
}

struct CriticalAlpha {
  double alpha = 0.0;             // rad
  double lift_coefficient = 0.0;
  double stall_speed = 0.0;       // m/s
  bool beyond_linear_regime = false;  // alpha above the thin-plate linear range
};

/// Smallest angle of attack whose linear C_L keeps the stall speed at or
/// below the cruise speed.
inline CriticalAlpha critical_alpha(double wing_loading, double aspect_ratio, double cruise_speed,
                                    EnvironmentSpec const& env = {}) {
  detail::require(wing_loading > 0.0 && aspect_ratio > 0.0 && cruise_speed > 0.0,
                  "critical_alpha: wing loading, aspect ratio and cruise speed must be > 0");
  double const slope = lift_slope_lp(aspect_ratio);
  double alpha = 2.0 * wing_loading / (env.air_density * cruise_speed * cruise_speed * slope);
  // Rounding can leave V_s a few ulps above V_c; step up until it is not.
  for (int i = 0; i < 16 && stall_speed(wing_loading, slope * alpha, env) > cruise_speed; ++i)
    alpha = std::nextafter(alpha, 2.0 * alpha);
  CriticalAlpha out;
  out.alpha = alpha;
  out.lift_coefficient = slope * alpha;
  out.stall_speed = stall_speed(wing_loading, out.lift_coefficient, env);
  out.beyond_linear_regime = alpha > units::radians(linear_lift_alpha_limit_deg);
  return out;
}

// --- planform solve ---------------------------------------------------------

inline constexpr double planform_ar_min = 1.0;
inline constexpr double planform_ar_max = 20.0;
inline constexpr double planform_residual_tolerance = 1e-9;

struct PlanformSolution {
  WingGeometry geometry;
  double cruise_speed = 0.0;  // m/s
  double achieved_re = 0.0;
  double residual = 0.0;      // N/m^2, cruise constraint minus target
};

namespace detail {

inline double chord_for(double area, double aspect_ratio) { return std::sqrt(area / aspect_ratio); }

inline double speed_for_re(double re, double chord, EnvironmentSpec const& env) {
  return re * env.air_viscosity / (env.air_density * chord);
}

}  // namespace detail

/// Cruise-constraint residual as a function of AR at fixed S and Re:
/// W/S(V_c(AR), AR) - target, with c = sqrt(S/AR) and V_c = Re mu / (rho c).
inline double planform_residual(double aspect_ratio, double target_wing_loading, double area, double target_re,
                                double zero_lift_drag, EnvironmentSpec const& env = {}) {
  double const c = detail::chord_for(area, aspect_ratio);
  double const v = detail::speed_for_re(target_re, c, env);
  return wing_loading_cruise(v, aspect_ratio, zero_lift_drag, env) - target_wing_loading;
}

/// Finds the aspect ratio in [1, 20] at which a wing of area S flying at the
/// target chord Reynolds number satisfies the cruise constraint. The residual
/// is increasing in AR on that interval, so bisection is sufficient.
inline PlanformSolution solve_planform(double target_wing_loading, double area, double target_re,
                                       double zero_lift_drag, EnvironmentSpec const& env = {}) {
  env.validate();
  detail::require(target_wing_loading > 0.0, "solve_planform: target wing loading must be > 0");
  detail::require(area > 0.0, "solve_planform: reference area must be > 0");
  detail::require(target_re > 0.0, "solve_planform: target Reynolds number must be > 0");
  detail::require(zero_lift_drag > 0.0, "solve_planform: C_D0 must be > 0");

  auto residual = [&](double ar) {
    return planform_residual(ar, target_wing_loading, area, target_re, zero_lift_drag, env);
  };
  double const r_lo = residual(planform_ar_min);
  double const r_hi = residual(planform_ar_max);
  if (std::signbit(r_lo) == std::signbit(r_hi) && r_lo != 0.0 && r_hi != 0.0) {
    throw InfeasibleDesign("solve_planform: cruise residual does not change sign on AR in [1, 20] "
                           "(residual at AR=1: " + std::to_string(r_lo) +
                               " N/m^2, at AR=20: " + std::to_string(r_hi) + " N/m^2)",
                           r_lo, r_hi);
  }

  auto const root = numeric::bisect(residual, planform_ar_min, planform_ar_max);
  if (std::abs(root.residual) >= planform_residual_tolerance * target_wing_loading)
    throw Error("solve_planform: bisection did not reach the residual tolerance");

  PlanformSolution out;
  auto& g = out.geometry;
  g.aspect_ratio = root.root;
  g.reference_area = area;
  g.chord = detail::chord_for(area, g.aspect_ratio);
  g.span = std::sqrt(area * g.aspect_ratio);
  out.cruise_speed = detail::speed_for_re(target_re, g.chord, env);
  out.achieved_re = env.air_density * out.cruise_speed * g.chord / env.air_viscosity;
  out.residual = root.residual;
  return out;
}

// --- design space -----------------------------------------------------------

struct DesignSpaceGrid {
  std::vector<double> speeds;         // m/s, ascending
  std::vector<double> aspect_ratios;  // ascending
  std::vector<double> wing_loading;   // N/m^2, row-major: [speed index][AR index]

  double at(std::size_t speed_index, std::size_t ar_index) const {
    return wing_loading[speed_index * aspect_ratios.size() + ar_index];
  }
};

struct ContourPoint {
  double speed = 0.0;
  double aspect_ratio = 0.0;
};

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

/// Cruise wing loading over a (V_c, AR) grid. Endpoints are included.
inline DesignSpaceGrid design_space_grid(std::pair<double, double> speed_range,
                                         std::pair<double, double> ar_range, std::size_t speed_steps,
                                         std::size_t ar_steps, double zero_lift_drag,
                                         EnvironmentSpec const& env = {}) {
  env.validate();
  detail::require(speed_range.first > 0.0 && speed_range.second > speed_range.first,
                  "design_space_grid: speed range must be positive and ordered");
  detail::require(ar_range.first > 0.0 && ar_range.second > ar_range.first,
                  "design_space_grid: aspect ratio range must be positive and ordered");
  detail::require(speed_steps >= 2 && ar_steps >= 2, "design_space_grid: need at least 2 steps per axis");

  DesignSpaceGrid g;
  g.speeds = linspace(speed_range.first, speed_range.second, speed_steps);
  g.aspect_ratios = linspace(ar_range.first, ar_range.second, ar_steps);
  g.wing_loading.resize(speed_steps * ar_steps);
  for (std::size_t i = 0; i < speed_steps; ++i)
    for (std::size_t j = 0; j < ar_steps; ++j)
      g.wing_loading[i * ar_steps + j] = wing_loading_cruise(g.speeds[i], g.aspect_ratios[j], zero_lift_drag, env);
  return g;
}

/// Iso-line of the grid at `target`, found by linear interpolation on every
/// grid edge whose end values bracket the target. Points are ordered by
/// increasing speed (then decreasing AR), which traces the single monotone
/// branch of the cruise constraint.
inline std::vector<ContourPoint> iso_contour(DesignSpaceGrid const& g, double target) {
  std::vector<ContourPoint> pts;
  auto const ns = g.speeds.size();
  auto const na = g.aspect_ratios.size();
  auto crossing = [&](double v0, double v1) {
    return (v0 - target) * (v1 - target) <= 0.0 && v0 != v1;
  };
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      double const v = g.at(i, j);
      if (i + 1 < ns && crossing(v, g.at(i + 1, j))) {
        double const t = (target - v) / (g.at(i + 1, j) - v);
        pts.push_back({g.speeds[i] + t * (g.speeds[i + 1] - g.speeds[i]), g.aspect_ratios[j]});
      }
      if (j + 1 < na && crossing(v, g.at(i, j + 1))) {
        double const t = (target - v) / (g.at(i, j + 1) - v);
        pts.push_back({g.speeds[i], g.aspect_ratios[j] + t * (g.aspect_ratios[j + 1] - g.aspect_ratios[j])});
      }
    }
  }
  std::sort(pts.begin(), pts.end(), [](auto const& a, auto const& b) {
    if (a.speed != b.speed) return a.speed < b.speed;
    return a.aspect_ratio > b.aspect_ratio;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](auto const& a, auto const& b) {
                          return a.speed == b.speed && a.aspect_ratio == b.aspect_ratio;
                        }),
            pts.end());
  return pts;
}

}  // namespace edwing
