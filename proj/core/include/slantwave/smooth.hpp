#pragma once

#include <cmath>

namespace slantwave {

/// exp(-1/s) for s > 0, 0 otherwise; the standard C-infinity mollifier seed.
inline double mollifier_seed(double s) {
  return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

inline double mollifier_seed_deriv(double s) {
  if (s <= 0.0) return 0.0;
  const double e = std::exp(-1.0 / s);
  return e / (s * s);
}

/// Smooth step: 0 for s <= 0, 1 for s >= 1, C-infinity monotone in between.
inline double smooth_step(double s) {
  const double a = mollifier_seed(s);
  const double b = mollifier_seed(1.0 - s);
  return a / (a + b);
}

inline double smooth_step_deriv(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double a = mollifier_seed(s);
  const double b = mollifier_seed(1.0 - s);
  const double da = mollifier_seed_deriv(s);
  const double db = -mollifier_seed_deriv(1.0 - s);
  const double den = a + b;
  return (da * den - a * (da + db)) / (den * den);
}

/// Compactly supported bump: 1 at s = 0, 0 for |s| >= 1, C-infinity.
inline double smooth_bump(double s) {
  const double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s2));
}

inline double smooth_bump_deriv(double s) {
  const double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  const double d = 1.0 - s2;
  return smooth_bump(s) * (-2.0 * s / (d * d));
}

}  // namespace slantwave
