#pragma once
/*
  Unit conversions used at the I/O boundary.

  Everything inside the library is SI (m, kg, s, N, Pa, rad). The single
  exception is energy content, which stays in kcal because that is the unit
  nutrition targets are stated in.
*/

#include <numbers>

namespace edwing::units {

inline constexpr double pi = std::numbers::pi;

// Length
inline constexpr double mm_to_m = 1e-3;
inline constexpr double m_to_mm = 1e3;

// Area
inline constexpr double cm2_to_m2 = 1e-4;
inline constexpr double m2_to_cm2 = 1e4;

// Mass
inline constexpr double g_to_kg = 1e-3;
inline constexpr double kg_to_g = 1e3;

// Stress / modulus
inline constexpr double kpa_to_pa = 1e3;
inline constexpr double mpa_to_pa = 1e6;
inline constexpr double pa_to_kpa = 1e-3;
inline constexpr double pa_to_mpa = 1e-6;

// Angle
inline constexpr double deg_to_rad = pi / 180.0;
inline constexpr double rad_to_deg = 180.0 / pi;

constexpr double degrees(double rad) { return rad * rad_to_deg; }
constexpr double radians(double deg) { return deg * deg_to_rad; }

}  // namespace edwing::units
