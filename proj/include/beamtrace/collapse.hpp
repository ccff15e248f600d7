// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "beamtrace/trace.hpp"

namespace beamtrace {

/// Merges maximal runs of consecutive samples whose positions all lie
/// within `radius_m` of the run's first sample into one sample:
///   position  — centroid of the run,
///   timestamp — midpoint of first and last,
///   rsrp/snr  — mean in linear power (mW), reconverted to dB,
///   throughput — arithmetic mean,
///   beam_id   — modal value, ties to the earliest observed,
///   rank      — modal value, ties to the smallest.
/// Lost-packet samples neither contribute measurement values nor break a
/// run. Single-sample runs are copied through unchanged.
/// Throws EmptyTrace when the trace has no samples, DomainError on a
/// negative radius.
DriveTrace collapse_static_clusters(const DriveTrace& trace, double radius_m = 1.0);

}  // namespace beamtrace
