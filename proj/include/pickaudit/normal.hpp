#pragma once

#include <span>

#include "pickaudit/probability.hpp"

namespace pickaudit {

// Standard normal density (1/sqrt(2 pi)) exp(-x^2/2). x must be finite.
double normal_density(double x);

// Survival function P[X > x] of the standard normal. x must be finite.
// Strictly decreasing; survival(x) + survival(-x) == 1.
double normal_survival(double x);

// Inverse of normal_survival on (0, 1): |survival(result) - p| <= 1e-12
// over p in (1e-12, 1 - 1e-12). Throws for p outside (0, 1).
double normal_inv_survival(double p);

// Batch versions through the active SIMD backend. Same contracts per
// element, but inputs are assumed valid (no per-element validation).
void normal_survival_batch(std::span<const double> x, std::span<double> out);
void normal_inv_survival_batch(std::span<const double> p, std::span<double> out);

}  // namespace pickaudit
