#pragma once

#include <cmath>

// Closed-form tail inequalities used by the distribution validators and the
// bounds module: two-sided Mill's ratio bounds, the bracket they imply for
// squared upper quantiles, and the sub-Gaussian tail bound of the Beta
// distribution (variance factor 1/(4(a+b+1))).

namespace pickaudit {

// Bounds on survival(x) / density(x), valid for x > 0.
inline double mills_ratio_lower(double x) { return 2.0 / (std::sqrt(x * x + 4.0) + x); }
inline double mills_ratio_upper(double x) { return 2.0 / (std::sqrt(x * x + 2.0) + x); }

// With s = normal_inv_survival(alpha), alpha in (0, 1/2):
//   quantile_sq_lower(alpha) < s^2 < quantile_sq_upper(alpha).
inline double quantile_sq_lower(double alpha) {
  return std::log(1.0 / alpha) + std::log(1.0 / std::sqrt(2.0 * M_PI)) - 1.0;
}
inline double quantile_sq_upper(double alpha) {
  return 2.0 * std::log(1.0 / alpha) + std::log(1.0 / M_PI);
}

// P[|Beta(a,b) - a/(a+b)| > t] <= beta_tail_bound(a, b, t), each side.
inline double beta_tail_bound(double a, double b, double t) {
  return std::exp(-2.0 * (a + b + 1.0) * t * t);
}

}  // namespace pickaudit
