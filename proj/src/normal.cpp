#include "pickaudit/normal.hpp"

#include <cmath>

#include "kernels/backend.hpp"
#include "kernels/kernels.hpp"
#include "pickaudit/errors.hpp"

namespace pickaudit {

double normal_density(double x) {
  if (!std::isfinite(x)) throw DomainError("normal_density: non-finite argument");
  return kern::kInvSqrt2Pi * kern::kexp<double>(-0.5 * (x * x));
}

double normal_survival(double x) {
  if (!std::isfinite(x)) throw DomainError("normal_survival: non-finite argument");
  return kern::ksurvival<double>(x);
}

double normal_inv_survival(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_inv_survival: p must be in (0, 1)");
  return kern::kinv_survival<double>(p);
}

void normal_survival_batch(std::span<const double> x, std::span<double> out) {
  if (x.size() != out.size()) throw DomainError("normal_survival_batch: size mismatch");
  if (!x.empty()) kern::active_batch_fns().survival(x.data(), out.data(), x.size());
}

void normal_inv_survival_batch(std::span<const double> p, std::span<double> out) {
  if (p.size() != out.size()) throw DomainError("normal_inv_survival_batch: size mismatch");
  if (!p.empty()) kern::active_batch_fns().inv_survival(p.data(), out.data(), p.size());
}

}  // namespace pickaudit
