// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/geo.hpp"

#include <cmath>

#include "beamtrace/kernels.hpp"

namespace beamtrace {

double haversine_m(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg) {
    constexpr double deg = 0.017453292519943295;  // pi / 180
    const double phi1 = lat1_deg * deg;
    const double phi2 = lat2_deg * deg;
    const double sp = std::sin(0.5 * (lat2_deg - lat1_deg) * deg);
    const double sl = std::sin(0.5 * (lon2_deg - lon1_deg) * deg);
    double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
    if (h > 1.0) h = 1.0;
    if (h < 0.0) h = 0.0;
    return 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
}

std::vector<double> path_segment_distances_m(const DriveTrace& t) {
    const std::size_t n = t.samples.size();
    if (n < 2) return {};
    std::vector<double> lat(n), lon(n);
    for (std::size_t i = 0; i < n; ++i) {
        lat[i] = t.samples[i].lat;
        lon[i] = t.samples[i].lon;
    }
    std::vector<double> out(n - 1);
    kernels::haversine_segments(lat, lon, out);
    return out;
}

double path_length_m(const DriveTrace& t) {
    const std::vector<double> seg = path_segment_distances_m(t);
    return kernels::sum(seg);
}

}  // namespace beamtrace
