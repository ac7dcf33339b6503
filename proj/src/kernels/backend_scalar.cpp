#include "backend.hpp"
#include "kernels.hpp"

namespace pickaudit::kern {

namespace {

void survival_scalar(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = ksurvival<double>(in[i]);
}

void inv_survival_scalar(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = kinv_survival<double>(in[i]);
}

}  // namespace

const BatchFns& scalar_batch_fns() {
  static const BatchFns fns{&survival_scalar, &inv_survival_scalar};
  return fns;
}

}  // namespace pickaudit::kern
