#include <cstdlib>
#include <cstring>

#include "backend.hpp"
#include "pickaudit/errors.hpp"
#include "pickaudit/simd.hpp"

namespace pickaudit {

namespace kern {

namespace {

simd::Backend resolve_active() {
  const char* env = std::getenv("PICKAUDIT_SIMD");
  if (env != nullptr && std::strcmp(env, "auto") != 0) {
    for (simd::Backend b : simd::available_backends()) {
      if (simd::name(b) == env) return b;
    }
    // Unknown or unavailable request: fall through to auto.
  }
#ifdef PICKAUDIT_HAVE_AVX2
  if (avx2_supported_at_runtime()) return simd::Backend::avx2;
#endif
#ifdef PICKAUDIT_HAVE_NEON
  return simd::Backend::neon;
#endif
  return simd::Backend::scalar;
}

const BatchFns* table_for(simd::Backend b) {
  switch (b) {
    case simd::Backend::scalar:
      return &scalar_batch_fns();
    case simd::Backend::avx2:
#ifdef PICKAUDIT_HAVE_AVX2
      if (avx2_supported_at_runtime()) return &avx2_batch_fns();
#endif
      return nullptr;
    case simd::Backend::neon:
#ifdef PICKAUDIT_HAVE_NEON
      return &neon_batch_fns();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

}  // namespace

const BatchFns& active_batch_fns() {
  static const BatchFns& fns = *table_for(resolve_active());
  return fns;
}

}  // namespace kern

namespace simd {

std::string_view name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

bool available(Backend b) { return kern::table_for(b) != nullptr; }

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
    if (available(b)) out.push_back(b);
  }
  return out;
}

Backend active() {
  static const Backend b = kern::resolve_active();
  return b;
}

void survival_batch(Backend b, std::span<const double> x, std::span<double> out) {
  const kern::BatchFns* fns = kern::table_for(b);
  if (fns == nullptr) throw DomainError("simd backend not available");
  if (x.size() != out.size()) throw DomainError("batch size mismatch");
  if (!x.empty()) fns->survival(x.data(), out.data(), x.size());
}

void inv_survival_batch(Backend b, std::span<const double> p, std::span<double> out) {
  const kern::BatchFns* fns = kern::table_for(b);
  if (fns == nullptr) throw DomainError("simd backend not available");
  if (p.size() != out.size()) throw DomainError("batch size mismatch");
  if (!p.empty()) fns->inv_survival(p.data(), out.data(), p.size());
}

}  // namespace simd

}  // namespace pickaudit
