#pragma once
// Thrust-to-weight requirements and the margin of the installed motor.

#include <cmath>
#include <string>
#include <vector>

#include "edwing/error.hpp"
#include "edwing/sizing.hpp"
#include "edwing/units.hpp"

namespace edwing {

struct PropulsionSpec {
  double drag_coefficient = 0.045;  // C_D of the whole aircraft
  double max_thrust = 1.079;        // N
  double required_tw_cruise = 0.0;
  double max_tw = 0.0;
  double thrust_match_tw = 0.0;
};

/// Cruise T/W = q C_D S / W + W / (pi AR e q S), q = 1/2 rho V_c^2.
inline double cruise_thrust_to_weight(double gross_weight, double area, double aspect_ratio, double oswald,
                                      double cruise_speed, double drag_coefficient,
                                      EnvironmentSpec const& env = {}) {
  detail::require(gross_weight > 0.0, "cruise_thrust_to_weight: weight must be > 0");
  detail::require(area > 0.0, "cruise_thrust_to_weight: area must be > 0");
  detail::require(aspect_ratio > 0.0 && oswald > 0.0,
                  "cruise_thrust_to_weight: aspect ratio and Oswald factor must be > 0");
  detail::require(cruise_speed > 0.0, "cruise_thrust_to_weight: dynamic pressure must be > 0");
  detail::require(drag_coefficient >= 0.0, "cruise_thrust_to_weight: C_D must be >= 0");
  double const q = 0.5 * env.air_density * cruise_speed * cruise_speed;
  double const parasite = q * drag_coefficient * area / gross_weight;
  double const induced = gross_weight / (units::pi * aspect_ratio * oswald * q * area);
  return parasite + induced;
}

/// Lower bound of the cruise T/W over all dynamic pressures.
inline double minimum_cruise_thrust_to_weight(double aspect_ratio, double oswald, double drag_coefficient) {
  return 2.0 * std::sqrt(drag_coefficient / (units::pi * aspect_ratio * oswald));
}

inline double thrust_match_tw(double lift_drag_ratio) {
  detail::require(lift_drag_ratio > 0.0, "thrust_match_tw: L/D must be > 0");
  return 1.0 / lift_drag_ratio;
}

inline double max_thrust_to_weight(double max_thrust, double gross_weight) {
  detail::require(gross_weight > 0.0, "max_thrust_to_weight: weight must be > 0");
  detail::require(max_thrust >= 0.0, "max_thrust_to_weight: thrust must be >= 0");
  return max_thrust / gross_weight;
}

struct ThrustMarginReport {
  std::vector<double> margins;  // max T/W over each requirement
  bool pass = false;            // every margin strictly above 1
};

inline ThrustMarginReport check_thrust_margin(double max_tw, std::vector<double> const& required_tw) {
  detail::require(max_tw >= 0.0, "check_thrust_margin: max T/W must be >= 0");
  ThrustMarginReport r;
  r.pass = true;
  for (double req : required_tw) {
    detail::require(req > 0.0, "check_thrust_margin: required T/W must be > 0");
    double const m = max_tw / req;
    r.margins.push_back(m);
    if (!(m > 1.0)) r.pass = false;
  }
  return r;
}

}  // namespace edwing
