#pragma once

#include <cstddef>

// Internal backend table. Each built backend exposes one row of batch
// entry points; dispatch.cpp picks the active one at process start.

namespace pickaudit::kern {

struct BatchFns {
  void (*survival)(const double* in, double* out, std::size_t n);
  void (*inv_survival)(const double* in, double* out, std::size_t n);
};

const BatchFns& scalar_batch_fns();

#ifdef PICKAUDIT_HAVE_AVX2
const BatchFns& avx2_batch_fns();
bool avx2_supported_at_runtime();
#endif

#ifdef PICKAUDIT_HAVE_NEON
const BatchFns& neon_batch_fns();
#endif

// Active table after env override / feature detection.
const BatchFns& active_batch_fns();

}  // namespace pickaudit::kern
