#pragma once
/*
  Small numerical kernels shared by the sizing and structure modules:
  bracketed bisection, composite Simpson quadrature on uniform samples and
  cumulative trapezoid integration.
*/

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "edwing/error.hpp"

namespace edwing::numeric {

struct BisectionResult {
  double root = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Bisection on [lo, hi] for a residual with opposite signs at the ends.
/// Iterates until the bracket collapses to adjacent doubles or the residual
/// is exactly zero, so the answer is as tight as the arithmetic allows.
/// Throws InvalidArgument if the ends do not bracket a root.
template <typename Fn>
BisectionResult bisect(Fn&& residual, double lo, double hi, int max_iterations = 200) {
  double f_lo = residual(lo);
  double f_hi = residual(hi);
  if (f_lo == 0.0) return {lo, f_lo, 0};
  if (f_hi == 0.0) return {hi, f_hi, 0};
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw InvalidArgument("bisect: residual does not change sign on the bracket");

  BisectionResult out{lo, f_lo, 0};
  for (int it = 1; it <= max_iterations; ++it) {
    double const mid = lo + 0.5 * (hi - lo);
    double const f_mid = residual(mid);
    out = {mid, f_mid, it};
    if (f_mid == 0.0 || mid <= lo || mid >= hi) break;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return out;
}

/// Composite Simpson over uniformly spaced samples with step h.
/// Requires an even, non-zero number of intervals.
inline double simpson(std::span<double const> f, double h) {
  std::size_t const intervals = f.empty() ? 0 : f.size() - 1;
  if (intervals == 0 || intervals % 2 != 0)
    throw InvalidArgument("simpson: interval count must be even and positive");
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i < intervals; ++i) (i % 2 ? odd : even) += f[i];
  return h / 3.0 * (f.front() + 4.0 * odd + 2.0 * even + f.back());
}

/// Simpson quadrature for integrands with a square-root endpoint singularity
/// at the last sample, i.e. f(x) ~ a + b*sqrt(x_end - x) near x_end (an
/// elliptic loading at the wing tip). The first n-2 intervals use composite
/// Simpson; the last two are integrated exactly against the interpolant in
/// the basis {1, sqrt(s), s}, s = x_end - x. Plain Simpson converges only as
/// h^1.5 on such profiles.
inline double simpson_sqrt_tip(std::span<double const> f, double h) {
  std::size_t const intervals = f.empty() ? 0 : f.size() - 1;
  if (intervals < 2 || intervals % 2 != 0)
    throw InvalidArgument("simpson_sqrt_tip: interval count must be even and >= 2");

  double body = 0.0;
  if (intervals > 2) body = simpson(f.first(intervals - 1), h);

  // Tip panel in units of h: nodes at s = 2, 1, 0.
  double const f0 = f[intervals];
  double const d1 = f[intervals - 1] - f0;
  double const d2 = f[intervals - 2] - f0;
  double const sqrt_coef = (d2 - 2.0 * d1) / (std::sqrt(2.0) - 2.0);
  double const lin_coef = d1 - sqrt_coef;
  // Integral over s in [0, 2] of (f0 + b sqrt(s) + c s) ds.
  double const tip = 2.0 * f0 + (4.0 * std::sqrt(2.0) / 3.0) * sqrt_coef + 2.0 * lin_coef;
  return body + h * tip;
}

/// Running trapezoid integral; out[i] = integral from sample 0 to sample i.
inline std::vector<double> cumulative_trapezoid(std::span<double const> f, double h) {
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i) out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  return out;
}

}  // namespace edwing::numeric
