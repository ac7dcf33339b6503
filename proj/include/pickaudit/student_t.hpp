#pragma once

namespace pickaudit {

// Survival function P[T > x] of the Student-t distribution with integer
// degrees of freedom (all uses here are N-1 or N_P+N_I-2). Decreasing in x;
// converges to normal_survival as dof grows.
double t_survival(double x, int dof);

// Inverse of t_survival on (0, 1): |t_survival(result, dof) - p| <= 1e-10.
double t_inv_survival(double p, int dof);

// Regularized incomplete beta I_x(a, b), exposed for the distribution
// validators. Continued-fraction evaluation (modified Lentz).
double regularized_incomplete_beta(double x, double a, double b);

}  // namespace pickaudit
