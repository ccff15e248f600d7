// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <cmath>
#include <immintrin.h>

#include "beamtrace/geo.hpp"
#include "simd_math_avx2.hpp"

namespace beamtrace::kernels::detail {

using namespace beamtrace::kernels::avx2;

double sum_avx2(std::span<const double> x) {
    const std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x.data() + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x.data() + i + 4));
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x.data() + i));
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc0);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) total += x[i];
    return total;
}

double sum_log_avx2(std::span<const double> x) {
    const std::size_t n = x.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, v_log(_mm256_loadu_pd(x.data() + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) total += std::log(x[i]);
    return total;
}

void min_with_avx2(std::span<double> x, double cap) {
    const std::size_t n = x.size();
    const __m256d vcap = _mm256_set1_pd(cap);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        // min(cap, v): keeps v (including NaN) unless cap < v, matching the
        // scalar (v > cap) ? cap : v.
        const __m256d v = _mm256_loadu_pd(x.data() + i);
        _mm256_storeu_pd(x.data() + i, _mm256_min_pd(vcap, v));
    }
    for (; i < n; ++i) x[i] = (x[i] > cap) ? cap : x[i];
}

void haversine_segments_avx2(std::span<const double> lat_deg,
                             std::span<const double> lon_deg,
                             std::span<double> out_m) {
    const std::size_t npts = lat_deg.size();
    if (npts < 2) return;
    const std::size_t nseg = npts - 1;
    const __m256d deg = _mm256_set1_pd(0.017453292519943295);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d two_r = _mm256_set1_pd(2.0 * kEarthRadiusM);

    std::size_t i = 0;
    for (; i + 4 <= nseg; i += 4) {
        const __m256d la1 = _mm256_loadu_pd(lat_deg.data() + i);
        const __m256d la2 = _mm256_loadu_pd(lat_deg.data() + i + 1);
        const __m256d lo1 = _mm256_loadu_pd(lon_deg.data() + i);
        const __m256d lo2 = _mm256_loadu_pd(lon_deg.data() + i + 1);

        const __m256d phi1 = _mm256_mul_pd(la1, deg);
        const __m256d phi2 = _mm256_mul_pd(la2, deg);
        const __m256d dphi = _mm256_mul_pd(_mm256_sub_pd(la2, la1), deg);
        const __m256d dlam = _mm256_mul_pd(_mm256_sub_pd(lo2, lo1), deg);

        const __m256d sp = v_sin(_mm256_mul_pd(half, dphi));
        const __m256d sl = v_sin(_mm256_mul_pd(half, dlam));
        const __m256d cc = _mm256_mul_pd(v_cos(phi1), v_cos(phi2));
        __m256d h = _mm256_fmadd_pd(_mm256_mul_pd(cc, sl), sl, _mm256_mul_pd(sp, sp));
        h = _mm256_max_pd(zero, _mm256_min_pd(one, h));
        const __m256d d = _mm256_mul_pd(two_r, v_asin(_mm256_sqrt_pd(h)));
        _mm256_storeu_pd(out_m.data() + i, d);
    }
    if (i < nseg) {
        haversine_segments_scalar(lat_deg.subspan(i), lon_deg.subspan(i), out_m.subspan(i));
    }
}

}  // namespace beamtrace::kernels::detail

#else  // non-x86 builds: keep the symbols, dispatch never selects them

namespace beamtrace::kernels::detail {

double sum_avx2(std::span<const double> x) { return sum_scalar(x); }
double sum_log_avx2(std::span<const double> x) { return sum_log_scalar(x); }
void min_with_avx2(std::span<double> x, double cap) { min_with_scalar(x, cap); }
void haversine_segments_avx2(std::span<const double> lat_deg,
                             std::span<const double> lon_deg,
                             std::span<double> out_m) {
    haversine_segments_scalar(lat_deg, lon_deg, out_m);
}

}  // namespace beamtrace::kernels::detail

#endif
