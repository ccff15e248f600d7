// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "beamtrace/trace.hpp"

namespace beamtrace {

/// How samples without a beam id interact with runs of constant beam id.
///   bridge — gaps do not split a run (the serving beam is assumed
///            unchanged while it is unobserved); the path still accrues
///            distance across the gap.
///   split  — any sample without a beam id terminates the current run.
enum class BeamGapPolicy { bridge, split };

/// Distances over which the serving beam did not change, plus an audit of
/// runs too short to yield a positive distance.
struct SsrSampleSet {
    std::vector<double> distances_m;  // strictly positive
    std::size_t zero_length_runs = 0;
    std::size_t total_runs = 0;  // == distances_m.size() + zero_length_runs
    std::string source;
};

/// Partitions the beam-id subsequence into maximal runs of identical ids.
/// A run spanning >= 2 samples contributes the along-path distance from its
/// first to its last sample (segment distances accumulated left to right).
/// Single-sample runs — and degenerate runs with zero along-path extent —
/// are counted in zero_length_runs instead.
/// Throws NoBeamData when no sample carries a beam id.
SsrSampleSet extract_ssr_segments(const DriveTrace& trace,
                                  BeamGapPolicy policy = BeamGapPolicy::bridge);

}  // namespace beamtrace
