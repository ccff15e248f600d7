// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/trace.hpp"

#include <algorithm>
#include <cmath>

#include "beamtrace/errors.hpp"

namespace beamtrace {

void validate_sample(const DriveSample& s) {
    if (!std::isfinite(s.timestamp)) throw DomainError("timestamp not finite");
    if (!std::isfinite(s.lat) || s.lat < -90.0 || s.lat > 90.0)
        throw DomainError("latitude out of [-90, 90]");
    if (!std::isfinite(s.lon) || s.lon < -180.0 || s.lon > 180.0)
        throw DomainError("longitude out of [-180, 180]");
    if (s.lost()) {
        if (s.snr_db || s.beam_id || s.rank || s.throughput_mbps)
            throw DomainError("lost-packet sample carries measurement fields");
        return;
    }
    if (!std::isfinite(*s.rsrp_dbm)) throw DomainError("rsrp not finite");
    if (s.snr_db && !std::isfinite(*s.snr_db)) throw DomainError("snr not finite");
    if (s.beam_id && *s.beam_id < 0) throw DomainError("beam_id negative");
    if (s.rank && *s.rank < 1) throw DomainError("rank below 1");
    if (s.throughput_mbps && (!std::isfinite(*s.throughput_mbps) || *s.throughput_mbps < 0.0))
        throw DomainError("throughput negative or not finite");
}

void validate_trace(const DriveTrace& t) {
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        validate_sample(t.samples[i]);
        if (i > 0 && t.samples[i].timestamp < t.samples[i - 1].timestamp)
            throw DomainError("timestamps decrease at sample " + std::to_string(i));
    }
}

BandConfig validate_band_config(const BandConfig& cfg) {
    const double grid_hz =
        static_cast<double>(cfg.max_resource_blocks) * cfg.subcarriers_per_rb * cfg.scs_khz * 1e3;
    const double bw_hz = cfg.bandwidth_mhz * 1e6;
    if (grid_hz > bw_hz)
        throw BandwidthOverflow("resource-block grid " + std::to_string(grid_hz / 1e6) +
                                " MHz exceeds bandwidth " + std::to_string(cfg.bandwidth_mhz) +
                                " MHz");
    if (cfg.beam_angles_deg.empty()) throw UnsortedBeams("beam angle set is empty");
    for (std::size_t i = 1; i < cfg.beam_angles_deg.size(); ++i)
        if (!(cfg.beam_angles_deg[i] > cfg.beam_angles_deg[i - 1]))
            throw UnsortedBeams("beam angles not strictly ascending");
    return cfg;
}

}  // namespace beamtrace
