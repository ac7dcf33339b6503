#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

// Lane operations for the scalar reference backend. The math kernels in
// kernels.hpp are templates over a pack type; instantiated with plain double
// they form the reference implementation, and the SIMD packs mirror these
// operations instruction for instruction so every backend computes the same
// arithmetic per lane.

namespace pickaudit::kern {

template <class P>
P splat(double c);

template <>
inline double splat<double>(double c) {
  return c;
}

inline double mul_add(double a, double b, double c) { return std::fma(a, b, c); }
inline double abs_(double a) { return std::fabs(a); }
inline double sqrt_(double a) { return std::sqrt(a); }
inline double floor_(double a) { return std::floor(a); }
// Assumes the default round-to-nearest-even FP environment.
inline double round_nearest(double a) { return std::nearbyint(a); }
inline double min_(double a, double b) { return b < a ? b : a; }
inline double max_(double a, double b) { return a < b ? b : a; }
inline double copysign_(double mag, double sgn) { return std::copysign(mag, sgn); }

inline bool lt(double a, double b) { return a < b; }
inline bool le(double a, double b) { return a <= b; }
inline bool gt(double a, double b) { return a > b; }
inline bool ge(double a, double b) { return a >= b; }

inline double select(bool m, double a, double b) { return m ? a : b; }
inline bool mask_or(bool a, bool b) { return a || b; }
inline bool any(bool m) { return m; }

// 2^k for an integral-valued k in [-1022, 1023].
inline double pow2_int(double k) {
  const auto e = static_cast<std::int64_t>(k) + 1023;
  return std::bit_cast<double>(static_cast<std::uint64_t>(e) << 52);
}

// Decomposes x > 0 as m * 2^e with m in [sqrt(2)/2, sqrt(2)).
inline void frexp_parts(double x, double& m, double& e) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  std::int64_t ei = static_cast<std::int64_t>(bits >> 52) - 1023;
  double mi = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) | 0x3FF0000000000000ull);
  if (mi > 1.4142135623730951) {
    mi *= 0.5;
    ei += 1;
  }
  m = mi;
  e = static_cast<double>(ei);
}

}  // namespace pickaudit::kern
