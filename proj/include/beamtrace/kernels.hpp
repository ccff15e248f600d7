// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>

// Data-parallel inner loops used by the analysis pipeline. Each kernel has
// a scalar reference implementation and, on x86-64 with AVX2+FMA, a SIMD
// variant selected once at startup. The SIMD variants are equivalence-tested
// against the scalar references; `min_with` is bit-identical, the others
// agree to a few ulp per element (vector log/sin/cos/asin are minimax
// polynomials, not libm).

namespace beamtrace::kernels {

enum class Backend { scalar, avx2 };

/// Backend currently in use. Chosen at first use: AVX2 when the CPU
/// supports AVX2+FMA and the environment variable BEAMTRACE_KERNELS is not
/// set to "scalar".
Backend active_backend();

/// Override the dispatch decision (test hook; affects the whole process).
void force_backend(Backend b);

/// True if this build and CPU can run the AVX2 variants.
bool avx2_available();

std::string backend_name(Backend b);

/// Sum of x.
double sum(std::span<const double> x);

/// Sum of natural logs of x. All elements must be > 0 (not checked here;
/// callers validate domains).
double sum_log(std::span<const double> x);

/// Elementwise x[i] = (x[i] > cap) ? cap : x[i]. NaN elements pass through.
void min_with(std::span<double> x, double cap);

/// Great-circle distances between consecutive (lat, lon) points, spherical
/// earth R = 6371008.8 m. out must have size n-1 for n input points.
void haversine_segments(std::span<const double> lat_deg,
                        std::span<const double> lon_deg,
                        std::span<double> out_m);

// Both variants exposed directly so tests can compare them regardless of
// the dispatched backend. The avx2_* entry points must only be called when
// avx2_available() is true.
namespace detail {
double sum_scalar(std::span<const double> x);
double sum_log_scalar(std::span<const double> x);
void min_with_scalar(std::span<double> x, double cap);
void haversine_segments_scalar(std::span<const double> lat_deg,
                               std::span<const double> lon_deg,
                               std::span<double> out_m);

double sum_avx2(std::span<const double> x);
double sum_log_avx2(std::span<const double> x);
void min_with_avx2(std::span<double> x, double cap);
void haversine_segments_avx2(std::span<const double> lat_deg,
                             std::span<const double> lon_deg,
                             std::span<double> out_m);
}  // namespace detail

}  // namespace beamtrace::kernels
