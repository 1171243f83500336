#pragma once
/*
  Tail sizing from volume coefficients

      C_VT = L_VT S_VT / (b S),   C_HT = L_HT S_HT / (c S)

  where L is the distance from the wing quarter chord to the tail quarter
  chord. Tail surfaces are sized first and the arms follow.
*/

#include <cmath>
#include <string>
#include <vector>

#include "edwing/error.hpp"

namespace edwing {

struct TailSpec {
  double c_vt = 0.05;
  double c_ht = 0.25;
  double s_vt = 0.0;  // m^2
  double s_ht = 0.0;  // m^2
  double l_vt = 0.0;  // m
  double l_ht = 0.0;  // m
};

inline constexpr double tail_ratio_min = 5.0;
inline constexpr double tail_ratio_max = 12.0;
inline constexpr double tail_identity_tolerance = 1e-9;

inline double tail_arm_from_area(double coefficient, double reference_length, double area, double tail_area) {
  detail::require(tail_area > 0.0, "tail_arm_from_area: tail area must be > 0");
  detail::require(coefficient > 0.0 && reference_length > 0.0 && area > 0.0,
                  "tail_arm_from_area: coefficient, reference length and wing area must be > 0");
  return coefficient * reference_length * area / tail_area;
}

inline double tail_area_from_arm(double coefficient, double reference_length, double area, double arm) {
  detail::require(arm > 0.0, "tail_area_from_arm: arm must be > 0");
  detail::require(coefficient >= 0.0 && reference_length > 0.0 && area > 0.0,
                  "tail_area_from_arm: reference length and wing area must be > 0");
  return coefficient * reference_length * area / arm;
}

/// Fills the arms of `spec` from its coefficients and tail areas.
inline TailSpec solve_tail_arms(TailSpec spec, double span, double chord, double area) {
  spec.l_vt = tail_arm_from_area(spec.c_vt, span, area, spec.s_vt);
  spec.l_ht = tail_arm_from_area(spec.c_ht, chord, area, spec.s_ht);
  return spec;
}

struct TailVerdict {
  bool pass = false;
  double coefficient_ratio = 0.0;  // C_HT / C_VT
  double vt_identity_residual = 0.0;  // relative
  double ht_identity_residual = 0.0;  // relative
  std::vector<std::string> violations;
};

/// Checks 5 <= C_HT/C_VT <= 12 and that both coefficients agree with the
/// stored arms and areas for the given wing.
inline TailVerdict validate_tail(TailSpec const& spec, double span, double chord, double area) {
  bool const populated = spec.c_vt > 0.0 && spec.c_ht > 0.0 && spec.s_vt > 0.0 && spec.s_ht > 0.0 &&
                         spec.l_vt > 0.0 && spec.l_ht > 0.0;
  if (!populated) throw InvalidArgument("validate_tail: tail spec is not fully populated");
  detail::require(span > 0.0 && chord > 0.0 && area > 0.0, "validate_tail: wing span, chord and area must be > 0");

  TailVerdict v;
  v.coefficient_ratio = spec.c_ht / spec.c_vt;
  double const c_vt = spec.l_vt * spec.s_vt / (span * area);
  double const c_ht = spec.l_ht * spec.s_ht / (chord * area);
  v.vt_identity_residual = std::abs(c_vt - spec.c_vt) / spec.c_vt;
  v.ht_identity_residual = std::abs(c_ht - spec.c_ht) / spec.c_ht;

  if (v.coefficient_ratio < tail_ratio_min || v.coefficient_ratio > tail_ratio_max)
    v.violations.push_back("C_HT/C_VT = " + std::to_string(v.coefficient_ratio) + " outside [5, 12]");
  if (v.vt_identity_residual > tail_identity_tolerance)
    v.violations.push_back("vertical tail: L_VT S_VT / (b S) differs from C_VT by " +
                           std::to_string(100.0 * v.vt_identity_residual) + " %");
  if (v.ht_identity_residual > tail_identity_tolerance)
    v.violations.push_back("horizontal tail: L_HT S_HT / (c S) differs from C_HT by " +
                           std::to_string(100.0 * v.ht_identity_residual) + " %");
  v.pass = v.violations.empty();
  return v;
}

}  // namespace edwing
