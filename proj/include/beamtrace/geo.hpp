// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "beamtrace/trace.hpp"

namespace beamtrace {

/// Mean earth radius of the spherical model, meters.
inline constexpr double kEarthRadiusM = 6371008.8;

/// Great-circle distance in meters between two (lat, lon) points in
/// degrees. Symmetric, non-negative; d(a, a) = 0.
double haversine_m(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg);

/// Distances between consecutive samples of a trace (size n-1). Uses the
/// dispatched batch kernel.
std::vector<double> path_segment_distances_m(const DriveTrace& t);

/// Total along-path length of a trace in meters.
double path_length_m(const DriveTrace& t);

}  // namespace beamtrace
