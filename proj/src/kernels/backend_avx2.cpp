// Compiled with -mavx2 -mfma; see src/CMakeLists.txt.

#include "backend.hpp"
#include "kernels.hpp"
#include "pack_avx2.hpp"

namespace pickaudit::kern {

namespace {

template <P4 (*Kernel)(P4)>
void run_batch(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store4(out + i, Kernel(load4(in + i)));
  if (i < n) {
    // Pad the tail with the last value so every element still goes through
    // the vector path (keeps backend outputs position-independent).
    double tmp[4];
    for (std::size_t j = 0; j < 4; ++j) tmp[j] = in[j < n - i ? i + j : n - 1];
    P4 r = Kernel(load4(tmp));
    store4(tmp, r);
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] = tmp[j];
  }
}

}  // namespace

const BatchFns& avx2_batch_fns() {
  static const BatchFns fns{&run_batch<&ksurvival<P4>>, &run_batch<&kinv_survival<P4>>};
  return fns;
}

bool avx2_supported_at_runtime() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace pickaudit::kern
