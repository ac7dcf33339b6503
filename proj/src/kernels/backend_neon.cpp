// aarch64 only; NEON doubles are baseline there, no runtime check needed.

#include "backend.hpp"
#include "kernels.hpp"
#include "pack_neon.hpp"

namespace pickaudit::kern {

namespace {

template <P2 (*Kernel)(P2)>
void run_batch(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(out + i, Kernel(load2(in + i)));
  if (i < n) {
    double tmp[2] = {in[n - 1], in[n - 1]};
    P2 r = Kernel(load2(tmp));
    store2(tmp, r);
    out[n - 1] = tmp[0];
  }
}

}  // namespace

const BatchFns& neon_batch_fns() {
  static const BatchFns fns{&run_batch<&ksurvival<P2>>, &run_batch<&kinv_survival<P2>>};
  return fns;
}

}  // namespace pickaudit::kern
