// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// 4-lane double-precision log / sin / cos / asin for the AVX2 kernels.
// Polynomial coefficients are Chebyshev near-minimax fits with approximation
// error below 1.3e-18 on each stated interval; evaluation rounding brings the
// total to a few ulp, which the kernel equivalence tests pin down.
//
// Domain notes:
//   v_log  — positive *normal* doubles (no subnormals, zero, inf, nan).
//   v_sin / v_cos — |x| <= ~1e4; intended for radians in [-pi, pi].
//   v_asin — |x| <= 1.

#include <immintrin.h>

namespace beamtrace::kernels::avx2 {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// --- log ---------------------------------------------------------------
// x = m * 2^e with m in [sqrt(1/2), sqrt(2));
// ln m = 2w + w^3 * L(w^2), w = (m-1)/(m+1), w^2 in [0, 0.0295].
inline __m256d v_log(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll);
    const __m256i half_expo = _mm256_set1_epi64x(0x3FE0000000000000ll);
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_expo));  // [0.5, 1)

    // biased exponent -> integer e with m in [0.5, 1)
    const __m256i sh = _mm256_srli_epi64(bits, 52);
    const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
    __m128i e32 = _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(sh, idx));
    e32 = _mm_sub_epi32(e32, _mm_set1_epi32(1022));

    // renormalize: m < sqrt(1/2) -> m *= 2, e -= 1
    const __m256d lt = _mm256_cmp_pd(m, splat(0.70710678118654752440), _CMP_LT_OQ);
    m = _mm256_blendv_pd(m, _mm256_add_pd(m, m), lt);
    const __m128i lt32 = _mm256_castsi256_si128(
        _mm256_permutevar8x32_epi32(_mm256_castpd_si256(lt), idx));
    e32 = _mm_add_epi32(e32, lt32);  // mask lanes are -1
    const __m256d e = _mm256_cvtepi32_pd(e32);

    const __m256d one = splat(1.0);
    const __m256d w = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d u = _mm256_mul_pd(w, w);

    __m256d p = splat(0.1188199734847007536246);
    p = _mm256_fmadd_pd(p, u, splat(0.1168812362680776102888));
    p = _mm256_fmadd_pd(p, u, splat(0.1333563867055626513966));
    p = _mm256_fmadd_pd(p, u, splat(0.1538457513231353642381));
    p = _mm256_fmadd_pd(p, u, splat(0.1818181859365697383791));
    p = _mm256_fmadd_pd(p, u, splat(0.2222222221985873369433));
    p = _mm256_fmadd_pd(p, u, splat(0.2857142857143535910927));
    p = _mm256_fmadd_pd(p, u, splat(0.3999999999999999250078));
    p = _mm256_fmadd_pd(p, u, splat(0.6666666666666666666803));

    const __m256d w3 = _mm256_mul_pd(w, u);
    const __m256d lnm = _mm256_fmadd_pd(w3, p, _mm256_add_pd(w, w));
    return _mm256_fmadd_pd(e, splat(0.69314718055994530942), lnm);
}

// --- sin / cos ---------------------------------------------------------

inline __m256d sin_poly(__m256d r, __m256d z) {
    // sin(r) = r + r*z*S(z), z = r^2, |r| <= pi/4
    __m256d s = splat(-7.586697117706917984663e-13);
    s = _mm256_fmadd_pd(s, z, splat(1.605853161898614683644e-10));
    s = _mm256_fmadd_pd(s, z, splat(-2.505210623244757732801e-8));
    s = _mm256_fmadd_pd(s, z, splat(2.755731921933916651755e-6));
    s = _mm256_fmadd_pd(s, z, splat(-1.984126984126506494653e-4));
    s = _mm256_fmadd_pd(s, z, splat(8.333333333333331492084e-3));
    s = _mm256_fmadd_pd(s, z, splat(-1.666666666666666666551e-1));
    return _mm256_fmadd_pd(_mm256_mul_pd(r, z), s, r);
}

inline __m256d cos_poly(__m256d z) {
    // cos(r) = 1 - z/2 + z^2*C(z), z = r^2, |r| <= pi/4
    __m256d c = splat(-1.138263242552171800541e-11);
    c = _mm256_fmadd_pd(c, z, splat(2.087614626840319789335e-9));
    c = _mm256_fmadd_pd(c, z, splat(-2.755731727172979288199e-7));
    c = _mm256_fmadd_pd(c, z, splat(2.480158729876568792727e-5));
    c = _mm256_fmadd_pd(c, z, splat(-1.388888888888739723669e-3));
    c = _mm256_fmadd_pd(c, z, splat(4.166666666666666538875e-2));
    const __m256d zz = _mm256_mul_pd(z, z);
    return _mm256_fmadd_pd(zz, c, _mm256_fmadd_pd(z, splat(-0.5), splat(1.0)));
}

struct Reduced {
    __m256d r;    // reduced argument, |r| <= pi/4
    __m128i j;    // quadrant index as int32
};

inline Reduced reduce_pio2(__m256d x) {
    const __m256d jd = _mm256_round_pd(
        _mm256_mul_pd(x, splat(0.6366197723675813430755)),  // 2/pi
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(jd, splat(1.570796326794896557999), x);   // pi/2 hi
    r = _mm256_fnmadd_pd(jd, splat(6.12323399573676588613e-17), r);        // pi/2 lo
    return {r, _mm256_cvtpd_epi32(jd)};
}

inline __m256d mask_from_bit(__m128i j, int bit) {
    const __m128i b = _mm_set1_epi32(bit);
    const __m128i m = _mm_cmpeq_epi32(_mm_and_si128(j, b), b);
    return _mm256_castsi256_pd(_mm256_cvtepi32_epi64(m));
}

inline __m256d v_sin(__m256d x) {
    const Reduced red = reduce_pio2(x);
    const __m256d z = _mm256_mul_pd(red.r, red.r);
    const __m256d sp = sin_poly(red.r, z);
    const __m256d cp = cos_poly(z);
    // quadrant j mod 4: 0 -> sin, 1 -> cos, 2 -> -sin, 3 -> -cos
    __m256d res = _mm256_blendv_pd(sp, cp, mask_from_bit(red.j, 1));
    const __m256d neg = _mm256_and_pd(mask_from_bit(red.j, 2), splat(-0.0));
    return _mm256_xor_pd(res, neg);
}

inline __m256d v_cos(__m256d x) {
    const Reduced red = reduce_pio2(x);
    const __m256d z = _mm256_mul_pd(red.r, red.r);
    const __m256d sp = sin_poly(red.r, z);
    const __m256d cp = cos_poly(z);
    // quadrant j mod 4: 0 -> cos, 1 -> -sin, 2 -> -cos, 3 -> sin
    __m256d res = _mm256_blendv_pd(cp, sp, mask_from_bit(red.j, 1));
    const __m128i j1 = _mm_add_epi32(red.j, _mm_set1_epi32(1));
    const __m256d neg = _mm256_and_pd(mask_from_bit(j1, 2), splat(-0.0));
    return _mm256_xor_pd(res, neg);
}

// --- asin --------------------------------------------------------------

inline __m256d asin_core(__m256d x, __m256d z) {
    // asin(x) = x + x^3 * A(x^2) for x in [0, 0.5], z = x^2
    __m256d a = splat(0.0296120342699492991554);
    a = _mm256_fmadd_pd(a, z, splat(-0.01924170759818818586713));
    a = _mm256_fmadd_pd(a, z, splat(0.01955453800384620783965));
    a = _mm256_fmadd_pd(a, z, splat(0.003044870046905273011875));
    a = _mm256_fmadd_pd(a, z, splat(0.00931956333234710457144));
    a = _mm256_fmadd_pd(a, z, splat(0.009621842530506777590303));
    a = _mm256_fmadd_pd(a, z, splat(0.01156645966424643707916));
    a = _mm256_fmadd_pd(a, z, splat(0.01396378000798693049148));
    a = _mm256_fmadd_pd(a, z, splat(0.01735281654055325381359));
    a = _mm256_fmadd_pd(a, z, splat(0.02237215744349935653908));
    a = _mm256_fmadd_pd(a, z, splat(0.03038194447553250096711));
    a = _mm256_fmadd_pd(a, z, splat(0.0446428571425518911985));
    a = _mm256_fmadd_pd(a, z, splat(0.07500000000000117751661));
    a = _mm256_fmadd_pd(a, z, splat(0.1666666666666666659153));
    return _mm256_fmadd_pd(_mm256_mul_pd(x, z), a, x);
}

inline __m256d v_asin(__m256d t) {
    const __m256d sign = _mm256_and_pd(t, splat(-0.0));
    const __m256d a = _mm256_andnot_pd(splat(-0.0), t);  // |t|
    const __m256d big = _mm256_cmp_pd(a, splat(0.5), _CMP_GT_OQ);

    // big branch: asin(a) = pi/2 - 2*asin(s), s = sqrt((1-a)/2) in [0, 0.5]
    const __m256d zbig = _mm256_mul_pd(_mm256_sub_pd(splat(1.0), a), splat(0.5));
    const __m256d sbig = _mm256_sqrt_pd(zbig);
    const __m256d zsmall = _mm256_mul_pd(a, a);

    const __m256d x = _mm256_blendv_pd(a, sbig, big);
    const __m256d z = _mm256_blendv_pd(zsmall, zbig, big);
    const __m256d p = asin_core(x, z);

    const __m256d res_big =
        _mm256_fnmadd_pd(splat(2.0), p, splat(1.5707963267948966192313));  // pi/2
    const __m256d res = _mm256_blendv_pd(p, res_big, big);
    return _mm256_or_pd(res, sign);
}

}  // namespace beamtrace::kernels::avx2
