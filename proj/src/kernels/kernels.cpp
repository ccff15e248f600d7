// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

#include "beamtrace/geo.hpp"

namespace beamtrace::kernels {

namespace detail {

double sum_scalar(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
}

double sum_log_scalar(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += std::log(v);
    return acc;
}

void min_with_scalar(std::span<double> x, double cap) {
    for (double& v : x) v = (v > cap) ? cap : v;
}

void haversine_segments_scalar(std::span<const double> lat_deg,
                               std::span<const double> lon_deg,
                               std::span<double> out_m) {
    constexpr double deg = 0.017453292519943295;  // pi / 180
    for (std::size_t i = 0; i + 1 < lat_deg.size(); ++i) {
        const double phi1 = lat_deg[i] * deg;
        const double phi2 = lat_deg[i + 1] * deg;
        const double dphi = (lat_deg[i + 1] - lat_deg[i]) * deg;
        const double dlam = (lon_deg[i + 1] - lon_deg[i]) * deg;
        const double sp = std::sin(0.5 * dphi);
        const double sl = std::sin(0.5 * dlam);
        double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
        if (h > 1.0) h = 1.0;
        if (h < 0.0) h = 0.0;
        out_m[i] = 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
    }
}

}  // namespace detail

namespace {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    if (const char* env = std::getenv("BEAMTRACE_KERNELS")) {
        if (std::string(env) == "scalar") return Backend::scalar;
    }
    return cpu_supports_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_state() {
    static std::atomic<Backend> state{detect_backend()};
    return state;
}

}  // namespace

bool avx2_available() { return cpu_supports_avx2(); }

Backend active_backend() { return backend_state().load(std::memory_order_relaxed); }

void force_backend(Backend b) { backend_state().store(b, std::memory_order_relaxed); }

std::string backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

double sum(std::span<const double> x) {
    if (active_backend() == Backend::avx2) return detail::sum_avx2(x);
    return detail::sum_scalar(x);
}

double sum_log(std::span<const double> x) {
    if (active_backend() == Backend::avx2) return detail::sum_log_avx2(x);
    return detail::sum_log_scalar(x);
}

void min_with(std::span<double> x, double cap) {
    if (active_backend() == Backend::avx2) return detail::min_with_avx2(x, cap);
    detail::min_with_scalar(x, cap);
}

void haversine_segments(std::span<const double> lat_deg,
                        std::span<const double> lon_deg,
                        std::span<double> out_m) {
    if (active_backend() == Backend::avx2)
        return detail::haversine_segments_avx2(lat_deg, lon_deg, out_m);
    detail::haversine_segments_scalar(lat_deg, lon_deg, out_m);
}

}  // namespace beamtrace::kernels
