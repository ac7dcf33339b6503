#pragma once

#include <arm_neon.h>

#include "pack_scalar.hpp"

// 2-wide NEON lanes (aarch64). Mirrors pack_avx2.hpp / pack_scalar.hpp.

namespace pickaudit::kern {

struct P2 {
  float64x2_t v;
};

struct M2 {
  uint64x2_t v;
};

template <>
inline P2 splat<P2>(double c) {
  return {vdupq_n_f64(c)};
}

inline P2 load2(const double* p) { return {vld1q_f64(p)}; }
inline void store2(double* p, P2 a) { vst1q_f64(p, a.v); }

inline P2 operator+(P2 a, P2 b) { return {vaddq_f64(a.v, b.v)}; }
inline P2 operator-(P2 a, P2 b) { return {vsubq_f64(a.v, b.v)}; }
inline P2 operator*(P2 a, P2 b) { return {vmulq_f64(a.v, b.v)}; }
inline P2 operator/(P2 a, P2 b) { return {vdivq_f64(a.v, b.v)}; }

// vfmaq_f64(c, a, b) computes c + a*b with a single rounding.
inline P2 mul_add(P2 a, P2 b, P2 c) { return {vfmaq_f64(c.v, a.v, b.v)}; }
inline P2 abs_(P2 a) { return {vabsq_f64(a.v)}; }
inline P2 sqrt_(P2 a) { return {vsqrtq_f64(a.v)}; }
inline P2 floor_(P2 a) { return {vrndmq_f64(a.v)}; }
inline P2 round_nearest(P2 a) { return {vrndnq_f64(a.v)}; }
inline P2 min_(P2 a, P2 b) { return {vminq_f64(a.v, b.v)}; }
inline P2 max_(P2 a, P2 b) { return {vmaxq_f64(a.v, b.v)}; }
inline P2 copysign_(P2 mag, P2 sgn) {
  const uint64x2_t signbit = vdupq_n_u64(0x8000000000000000ull);
  return {vbslq_f64(signbit, sgn.v, mag.v)};
}

inline M2 lt(P2 a, P2 b) { return {vcltq_f64(a.v, b.v)}; }
inline M2 le(P2 a, P2 b) { return {vcleq_f64(a.v, b.v)}; }
inline M2 gt(P2 a, P2 b) { return {vcgtq_f64(a.v, b.v)}; }
inline M2 ge(P2 a, P2 b) { return {vcgeq_f64(a.v, b.v)}; }

inline P2 select(M2 m, P2 a, P2 b) { return {vbslq_f64(m.v, a.v, b.v)}; }
inline M2 mask_or(M2 a, M2 b) { return {vorrq_u64(a.v, b.v)}; }
inline bool any(M2 m) { return (vgetq_lane_u64(m.v, 0) | vgetq_lane_u64(m.v, 1)) != 0; }

// 2^k for an integral-valued k in [-1022, 1023].
inline P2 pow2_int(P2 k) {
  const int64x2_t e = vaddq_s64(vcvtq_s64_f64(k.v), vdupq_n_s64(1023));
  return {vreinterpretq_f64_s64(vshlq_n_s64(e, 52))};
}

// Decomposes x > 0 (normal) as m * 2^e with m in [sqrt(2)/2, sqrt(2)).
inline void frexp_parts(P2 x, P2& m, P2& e) {
  const uint64x2_t bits = vreinterpretq_u64_f64(x.v);
  const int64x2_t ei =
      vsubq_s64(vreinterpretq_s64_u64(vshrq_n_u64(bits, 52)), vdupq_n_s64(1023));
  const uint64x2_t mant = vorrq_u64(vandq_u64(bits, vdupq_n_u64(0x000FFFFFFFFFFFFFull)),
                                    vdupq_n_u64(0x3FF0000000000000ull));
  P2 mi{vreinterpretq_f64_u64(mant)};
  P2 ed{vcvtq_f64_s64(ei)};
  const M2 big = gt(mi, splat<P2>(1.4142135623730951));
  m = select(big, mi * splat<P2>(0.5), mi);
  e = select(big, ed + splat<P2>(1.0), ed);
}

}  // namespace pickaudit::kern
