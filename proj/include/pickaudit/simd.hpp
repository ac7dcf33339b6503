#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace pickaudit::simd {

// Batch kernel backends. `scalar` is the reference implementation and is
// always present; the vector backends are built when the target supports
// them and selected at runtime (override with PICKAUDIT_SIMD=scalar|avx2|
// neon|auto).
enum class Backend { scalar, avx2, neon };

std::string_view name(Backend b);
bool available(Backend b);
std::vector<Backend> available_backends();

// The backend the process resolved at first use.
Backend active();

// Batch evaluation through an explicit backend; used by the equivalence
// tests. Inputs follow the kernel contracts (finite x; p strictly in (0,1)).
void survival_batch(Backend b, std::span<const double> x, std::span<double> out);
void inv_survival_batch(Backend b, std::span<const double> p, std::span<double> out);

}  // namespace pickaudit::simd
