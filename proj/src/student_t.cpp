#include "pickaudit/student_t.hpp"

#include <cmath>

#include "pickaudit/errors.hpp"

namespace pickaudit {

namespace {

// Continued fraction for the incomplete beta function, modified Lentz
// algorithm (Numerical Recipes form). Converges quickly for
// x < (a+1)/(a+b+2); the caller uses the symmetry relation otherwise.
double beta_cont_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("incomplete beta: a, b must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta: x must be in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(log_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cont_fraction(a, b, x) / a;
  }
  return 1.0 - bt * beta_cont_fraction(b, a, 1.0 - x) / b;
}

double t_survival(double x, int dof) {
  if (dof < 1) throw DomainError("t_survival: dof must be >= 1");
  if (!std::isfinite(x)) throw DomainError("t_survival: non-finite argument");
  const double v = static_cast<double>(dof);
  const double half_ib = 0.5 * regularized_incomplete_beta(v / (v + x * x), 0.5 * v, 0.5);
  return x >= 0.0 ? half_ib : 1.0 - half_ib;
}

double t_inv_survival(double p, int dof) {
  if (dof < 1) throw DomainError("t_inv_survival: dof must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("t_inv_survival: p must be in (0, 1)");
  const double q = p <= 0.5 ? p : 1.0 - p;
  if (q == 0.5) return 0.0;
  // Bracket the positive quantile, then bisect. Robust for every dof; the
  // inverse is not on any hot path.
  double lo = 0.0;
  double hi = 1.0;
  int guard = 0;
  while (t_survival(hi, dof) > q) {
    hi *= 2.0;
    if (++guard > 1100) break;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (t_survival(mid, dof) > q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mag = 0.5 * (lo + hi);
  return p <= 0.5 ? mag : -mag;
}

}  // namespace pickaudit
