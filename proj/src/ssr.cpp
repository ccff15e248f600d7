// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/ssr.hpp"

#include "beamtrace/errors.hpp"
#include "beamtrace/geo.hpp"

namespace beamtrace {

SsrSampleSet extract_ssr_segments(const DriveTrace& trace, BeamGapPolicy policy) {
    const auto& samples = trace.samples;
    const std::vector<double> seg = path_segment_distances_m(trace);

    SsrSampleSet out;
    out.source = trace.source;

    // Streaming scan over the beam-bearing subsequence. run_first/run_last
    // are indices into `samples`.
    bool in_run = false;
    int run_beam = 0;
    std::size_t run_first = 0, run_last = 0;
    bool any_beam = false;

    auto close_run = [&]() {
        if (!in_run) return;
        ++out.total_runs;
        if (run_last > run_first) {
            double d = 0.0;
            for (std::size_t j = run_first; j < run_last; ++j) d += seg[j];
            if (d > 0.0)
                out.distances_m.push_back(d);
            else
                ++out.zero_length_runs;  // co-located samples, no spatial extent
        } else {
            ++out.zero_length_runs;
        }
        in_run = false;
    };

    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!samples[i].beam_id) {
            if (policy == BeamGapPolicy::split) close_run();
            continue;
        }
        any_beam = true;
        const int beam = *samples[i].beam_id;
        if (in_run && beam == run_beam) {
            run_last = i;
        } else {
            close_run();
            in_run = true;
            run_beam = beam;
            run_first = run_last = i;
        }
    }
    close_run();

    if (!any_beam) throw NoBeamData();
    return out;
}

}  // namespace beamtrace
