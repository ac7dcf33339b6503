#pragma once

#include <immintrin.h>

#include "pack_scalar.hpp"

// 4-wide AVX2/FMA lanes. Mirrors the scalar operations in pack_scalar.hpp;
// this header is only included from the translation unit compiled with
// -mavx2 -mfma.

namespace pickaudit::kern {

struct P4 {
  __m256d v;
};

struct M4 {
  __m256d v;  // per-lane all-ones / all-zeros
};

template <>
inline P4 splat<P4>(double c) {
  return {_mm256_set1_pd(c)};
}

inline P4 load4(const double* p) { return {_mm256_loadu_pd(p)}; }
inline void store4(double* p, P4 a) { _mm256_storeu_pd(p, a.v); }

inline P4 operator+(P4 a, P4 b) { return {_mm256_add_pd(a.v, b.v)}; }
inline P4 operator-(P4 a, P4 b) { return {_mm256_sub_pd(a.v, b.v)}; }
inline P4 operator*(P4 a, P4 b) { return {_mm256_mul_pd(a.v, b.v)}; }
inline P4 operator/(P4 a, P4 b) { return {_mm256_div_pd(a.v, b.v)}; }

inline P4 mul_add(P4 a, P4 b, P4 c) { return {_mm256_fmadd_pd(a.v, b.v, c.v)}; }
inline P4 abs_(P4 a) { return {_mm256_andnot_pd(_mm256_set1_pd(-0.0), a.v)}; }
inline P4 sqrt_(P4 a) { return {_mm256_sqrt_pd(a.v)}; }
inline P4 floor_(P4 a) { return {_mm256_floor_pd(a.v)}; }
inline P4 round_nearest(P4 a) {
  return {_mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC)};
}
inline P4 min_(P4 a, P4 b) { return {_mm256_min_pd(a.v, b.v)}; }
inline P4 max_(P4 a, P4 b) { return {_mm256_max_pd(a.v, b.v)}; }
inline P4 copysign_(P4 mag, P4 sgn) {
  const __m256d signbit = _mm256_set1_pd(-0.0);
  return {_mm256_or_pd(_mm256_and_pd(signbit, sgn.v), _mm256_andnot_pd(signbit, mag.v))};
}

inline M4 lt(P4 a, P4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)}; }
inline M4 le(P4 a, P4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ)}; }
inline M4 gt(P4 a, P4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
inline M4 ge(P4 a, P4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ)}; }

inline P4 select(M4 m, P4 a, P4 b) { return {_mm256_blendv_pd(b.v, a.v, m.v)}; }
inline M4 mask_or(M4 a, M4 b) { return {_mm256_or_pd(a.v, b.v)}; }
inline bool any(M4 m) { return _mm256_movemask_pd(m.v) != 0; }

namespace avx2_detail {

// Integral-valued double (|k| < 2^51) -> int64 lanes, via the 1.5*2^52 trick.
inline __m256i f64_to_i64(__m256d k) {
  const __m256d magic = _mm256_set1_pd(6755399441055744.0);
  return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(k, magic)),
                          _mm256_castpd_si256(magic));
}

inline __m256d i64_to_f64(__m256i v) {
  const __m256d magic = _mm256_set1_pd(6755399441055744.0);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(v, _mm256_castpd_si256(magic))),
                       magic);
}

}  // namespace avx2_detail

// 2^k for an integral-valued k in [-1022, 1023].
inline P4 pow2_int(P4 k) {
  const __m256i e = _mm256_add_epi64(avx2_detail::f64_to_i64(k.v), _mm256_set1_epi64x(1023));
  return {_mm256_castsi256_pd(_mm256_slli_epi64(e, 52))};
}

// Decomposes x > 0 (normal) as m * 2^e with m in [sqrt(2)/2, sqrt(2)).
inline void frexp_parts(P4 x, P4& m, P4& e) {
  const __m256i bits = _mm256_castpd_si256(x.v);
  const __m256i ei = _mm256_sub_epi64(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(1023));
  const __m256i mant =
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
                      _mm256_set1_epi64x(0x3FF0000000000000ll));
  P4 mi{_mm256_castsi256_pd(mant)};
  P4 ed{avx2_detail::i64_to_f64(ei)};
  const M4 big = gt(mi, splat<P4>(1.4142135623730951));
  m = select(big, mi * splat<P4>(0.5), mi);
  e = select(big, ed + splat<P4>(1.0), ed);
}

}  // namespace pickaudit::kern
