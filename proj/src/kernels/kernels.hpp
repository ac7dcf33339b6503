#pragma once

#include "pack_scalar.hpp"

// Batch math kernels: standard normal survival function, its inverse, and
// the exp/log cores they need. Everything is a template over a lane pack
// type, so the scalar reference backend and the SIMD backends execute the
// same arithmetic (see pack_scalar.hpp / pack_avx2.hpp / pack_neon.hpp).
//
//   ksurvival:     0.5 * erfc(x / sqrt(2)) with Cody's rational Chebyshev
//                  approximations for erf/erfc (Cody 1969, the SPECFUN
//                  coefficient set).
//   kinv_survival: AS 241 rational initial estimate (Wichura's PPND16),
//                  polished with one Newton step against ksurvival, so the
//                  inverse is consistent with the forward function to
//                  machine precision.
//
// All kernels assume finite inputs; argument validation happens in the
// public wrappers (normal.hpp).

namespace pickaudit::kern {

inline constexpr double kInvLn2 = 1.4426950408889634074;
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kInvSqrt2 = 7.07106781186547524401e-01;
inline constexpr double kInvSqrtPi = 5.64189583547756286948e-01;
inline constexpr double kInvSqrt2Pi = 3.98942280401432677940e-01;

// exp(x) to a couple of ulp over the full double range; underflows to 0 and
// overflows to inf through the two-step power-of-two scaling.
template <class P>
P kexp(P x) {
  x = max_(min_(x, splat<P>(1000.0)), splat<P>(-1000.0));
  const P k = round_nearest(x * splat<P>(kInvLn2));
  P r = mul_add(k, splat<P>(-kLn2Hi), x);
  r = mul_add(k, splat<P>(-kLn2Lo), r);
  // exp(r) = 1 + r + r^2 * P(r), Taylor through r^13/13!
  P p = splat<P>(1.0 / 6227020800.0);
  p = mul_add(p, r, splat<P>(1.0 / 479001600.0));
  p = mul_add(p, r, splat<P>(1.0 / 39916800.0));
  p = mul_add(p, r, splat<P>(1.0 / 3628800.0));
  p = mul_add(p, r, splat<P>(1.0 / 362880.0));
  p = mul_add(p, r, splat<P>(1.0 / 40320.0));
  p = mul_add(p, r, splat<P>(1.0 / 5040.0));
  p = mul_add(p, r, splat<P>(1.0 / 720.0));
  p = mul_add(p, r, splat<P>(1.0 / 120.0));
  p = mul_add(p, r, splat<P>(1.0 / 24.0));
  p = mul_add(p, r, splat<P>(1.0 / 6.0));
  p = mul_add(p, r, splat<P>(0.5));
  const P er = mul_add(r * r, p, r + splat<P>(1.0));
  // 2^k in two halves so subnormal results stay representable.
  const P k1 = floor_(k * splat<P>(0.5));
  const P k2 = k - k1;
  return er * pow2_int(k1) * pow2_int(k2);
}

// log(x) for x > 0 (subnormals included) to a few ulp.
template <class P>
P klog(P x) {
  // Rescale subnormals so frexp_parts sees a normal number.
  const auto tiny = lt(x, splat<P>(2.2250738585072014e-308));
  x = select(tiny, x * splat<P>(18446744073709551616.0), x);  // * 2^64
  P m, e;
  frexp_parts(x, m, e);
  e = select(tiny, e - splat<P>(64.0), e);
  const P s = (m - splat<P>(1.0)) / (m + splat<P>(1.0));
  const P z = s * s;
  // 2*atanh(s) = 2s * (1 + z/3 + z^2/5 + ...), |s| <= 0.1716
  P t = splat<P>(1.0 / 21.0);
  t = mul_add(t, z, splat<P>(1.0 / 19.0));
  t = mul_add(t, z, splat<P>(1.0 / 17.0));
  t = mul_add(t, z, splat<P>(1.0 / 15.0));
  t = mul_add(t, z, splat<P>(1.0 / 13.0));
  t = mul_add(t, z, splat<P>(1.0 / 11.0));
  t = mul_add(t, z, splat<P>(1.0 / 9.0));
  t = mul_add(t, z, splat<P>(1.0 / 7.0));
  t = mul_add(t, z, splat<P>(1.0 / 5.0));
  t = mul_add(t, z, splat<P>(1.0 / 3.0));
  const P s2 = s + s;
  const P logm = mul_add(s2 * z, t, s2);
  return mul_add(e, splat<P>(kLn2Hi), mul_add(e, splat<P>(kLn2Lo), logm));
}

namespace cody {

// erf, |y| <= 0.46875
inline constexpr double A[5] = {3.16112374387056560e+00, 1.13864154151050156e+02,
                                3.77485237685302021e+02, 3.20937758913846947e+03,
                                1.85777706184603153e-01};
inline constexpr double B[4] = {2.36012909523441209e+01, 2.44024637934444173e+02,
                                1.28261652607737228e+03, 2.84423683343917062e+03};
// erfc, 0.46875 < y <= 4
inline constexpr double C[9] = {5.64188496988670089e-01, 8.88314979438837594e+00,
                                6.61191906371416295e+01, 2.98635138197400131e+02,
                                8.81952221241769090e+02, 1.71204761263407058e+03,
                                2.05107837782607147e+03, 1.23033935479799725e+03,
                                2.15311535474403846e-08};
inline constexpr double D[8] = {1.57449261107098347e+01, 1.17693950891312499e+02,
                                5.37181101862009858e+02, 1.62138957456669019e+03,
                                3.29079923573345963e+03, 4.36261909014324716e+03,
                                3.43936767414372164e+03, 1.23033935480374942e+03};
// erfc, y > 4
inline constexpr double Pc[6] = {3.05326634961232344e-01, 3.60344899949804439e-01,
                                 1.25781726111229246e-01, 1.60837851487422766e-02,
                                 6.58749161529837803e-04, 1.63153871373020978e-02};
inline constexpr double Qc[5] = {2.56852019228982242e+00, 1.87295284992346047e+00,
                                 5.27905102951428412e-01, 6.05183413124413191e-02,
                                 2.33520497626869185e-03};

}  // namespace cody

// exp(-y*y) computed with the split-argument trick so the relative error
// stays small deep in the tail: y^2 = trunc16(y)^2 + (y - t)(y + t) with
// trunc16(y)^2 exact in double.
template <class P>
P kexp_neg_ysq(P y) {
  const P t = floor_(y * splat<P>(16.0)) * splat<P>(0.0625);
  const P del = (y - t) * (y + t);
  return kexp(splat<P>(0.0) - t * t) * kexp(splat<P>(0.0) - del);
}

// Survival function of the standard normal, 0.5 * erfc(|x|/sqrt(2)) reflected
// for negative x. Relative error a few ulp down to the underflow threshold.
template <class P>
P ksurvival(P x) {
  using namespace cody;
  // The clamp keeps y*16 and y*y finite for absurdly large arguments; the
  // result has already underflowed to 0 (or rounded to 1) far before it.
  const P y = min_(abs_(x) * splat<P>(kInvSqrt2), splat<P>(64.0));

  // region A: y <= 0.46875, erf path
  const P ysq = y * y;
  P numa = splat<P>(A[4]) * ysq;
  P dena = ysq;
  for (int i = 0; i < 3; ++i) {
    numa = (numa + splat<P>(A[i])) * ysq;
    dena = (dena + splat<P>(B[i])) * ysq;
  }
  const P erf_a = y * (numa + splat<P>(A[3])) / (dena + splat<P>(B[3]));
  P erfc_y = splat<P>(1.0) - erf_a;

  const auto in_bc = gt(y, splat<P>(0.46875));
  if (any(in_bc)) {
    const P ef = kexp_neg_ysq(y);

    // region B: 0.46875 < y <= 4
    P numb = splat<P>(C[8]) * y;
    P denb = y;
    for (int i = 0; i < 7; ++i) {
      numb = (numb + splat<P>(C[i])) * y;
      denb = (denb + splat<P>(D[i])) * y;
    }
    const P erfc_b = ef * (numb + splat<P>(C[7])) / (denb + splat<P>(D[7]));
    erfc_y = select(in_bc, erfc_b, erfc_y);

    const auto in_c = gt(y, splat<P>(4.0));
    if (any(in_c)) {
      // region C: y > 4
      const P z = splat<P>(1.0) / (y * y);
      P numc = splat<P>(Pc[5]) * z;
      P denc = z;
      for (int i = 0; i < 4; ++i) {
        numc = (numc + splat<P>(Pc[i])) * z;
        denc = (denc + splat<P>(Qc[i])) * z;
      }
      const P rc = z * (numc + splat<P>(Pc[4])) / (denc + splat<P>(Qc[4]));
      const P erfc_c = ef * (splat<P>(kInvSqrtPi) - rc) / y;
      erfc_y = select(in_c, erfc_c, erfc_y);
    }
  }

  const P half_erfc = splat<P>(0.5) * erfc_y;
  return select(ge(x, splat<P>(0.0)), half_erfc, splat<P>(1.0) - half_erfc);
}

namespace as241 {

inline constexpr double A[8] = {3.3871328727963666080e+00, 1.3314166789178437745e+02,
                                1.9715909503065514427e+03, 1.3731693765509461125e+04,
                                4.5921953931549871457e+04, 6.7265770927008700853e+04,
                                3.3430575583588128105e+04, 2.5090809287301226727e+03};
inline constexpr double B[7] = {4.2313330701600911252e+01, 6.8718700749205790830e+02,
                                5.3941960214247511077e+03, 2.1213794301586595867e+04,
                                3.9307895800092710610e+04, 2.8729085735721942674e+04,
                                5.2264952788528545610e+03};
inline constexpr double C[8] = {1.42343711074968357734e+00, 4.63033784615654529590e+00,
                                5.76949722146069140550e+00, 3.64784832476320460504e+00,
                                1.27045825245236838258e+00, 2.41780725177450611770e-01,
                                2.27238449892691845833e-02, 7.74545014278341407640e-04};
inline constexpr double D[7] = {2.05319162663775882187e+00, 1.67638483018380384940e+00,
                                6.89767334985100004550e-01, 1.48103976427480074590e-01,
                                1.51986665636164571966e-02, 5.47593808499534494600e-04,
                                1.05075007164441684324e-09};

template <class P>
P ratio7(const double (&num)[8], const double (&den)[7], P r) {
  P n = splat<P>(num[7]);
  for (int i = 6; i >= 0; --i) n = mul_add(n, r, splat<P>(num[i]));
  P d = splat<P>(den[6]);
  for (int i = 5; i >= 0; --i) d = mul_add(d, r, splat<P>(den[i]));
  d = mul_add(d, r, splat<P>(1.0));
  return n / d;
}

}  // namespace as241

// Inverse survival function: the x with ksurvival(x) = p, for p in (0, 1).
// AS 241 rational estimates cover p down to exp(-25) ~ 1.4e-11; beyond that
// an asymptotic estimate plus extra Newton steps takes over. All work
// happens on the magnitude side (the smaller of p and 1-p, exact in
// double); one final Newton step against ksurvival polishes every lane.
template <class P>
P kinv_survival(P p) {
  const P qq = splat<P>(0.5) - p;
  const P r_small = min_(p, splat<P>(1.0) - p);
  // Where the density would underflow (|x| > ~36.5, far beyond statistical
  // use) the Newton steps are skipped and the raw estimate is returned.
  const auto safe = ge(r_small, splat<P>(1e-290));

  // central region: |0.5 - p| <= 0.425
  const P z = mul_add(splat<P>(0.0) - qq, qq, splat<P>(0.180625));
  P mag = abs_(qq) * as241::ratio7<P>(as241::A, as241::B, z);

  const auto in_tail = lt(r_small, splat<P>(0.075));
  if (any(in_tail)) {
    const P rr = splat<P>(0.0) - klog(r_small);  // = -log(min(p, 1-p))
    const P r = sqrt_(rr);
    P tail_mag = as241::ratio7<P>(as241::C, as241::D, r - splat<P>(1.6));

    const auto far = gt(r, splat<P>(5.0));
    if (any(far)) {
      // Solve x^2 + 2 log x = 2C with C = rr - log(sqrt(2 pi)) by fixed
      // point (two rounds), i.e. invert the leading tail asymptotic
      // survival ~ density/x, then run two Newton polish steps. The clamp
      // keeps the unused lanes harmless.
      const P two_c =
          max_((rr - splat<P>(0.91893853320467274178)) * splat<P>(2.0), splat<P>(2.0));
      P u = two_c - klog(two_c);
      u = two_c - klog(u);
      P fx = sqrt_(u);
      for (int it = 0; it < 2; ++it) {
        const P s = ksurvival(fx);
        const P dens = splat<P>(kInvSqrt2Pi) * kexp(splat<P>(-0.5) * (fx * fx));
        fx = select(safe, fx + (s - r_small) / dens, fx);
      }
      tail_mag = select(far, fx, tail_mag);
    }
    mag = select(in_tail, tail_mag, mag);
  }

  if (any(safe)) {
    const P s = ksurvival(mag);
    const P dens = splat<P>(kInvSqrt2Pi) * kexp(splat<P>(-0.5) * (mag * mag));
    const P polished = mag + (s - r_small) / dens;
    mag = select(safe, polished, mag);
  }

  return copysign_(mag, qq);
}

}  // namespace pickaudit::kern
