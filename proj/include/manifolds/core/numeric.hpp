#pragma once

#include <cmath>

namespace manifolds::numeric {

// Below this argument the trigonometric/hyperbolic quotients switch to their
// Taylor series; the closed forms lose digits to cancellation there.
inline constexpr double kSeriesThreshold = 1e-4;

/// sin(x) / x
inline double sinc(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// x / sin(x), for |x| < pi
inline double x_over_sin(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sin(x);
}

/// sinh(x) / x
inline double sinhc(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

/// x / sinh(x)
inline double x_over_sinh(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sinh(x);
}

/// (1 - cos(x)) / x^2
inline double one_minus_cos_over_sq(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 0.5 - x2 / 24.0 + x2 * x2 / 720.0;
  }
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s / (x * x);
}

}  // namespace manifolds::numeric
