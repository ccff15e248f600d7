// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beamtrace {

/// One GPS-stamped radio measurement. A sample without rsrp is a lost
/// packet: it carries only time and position, never snr/beam/rank/throughput.
struct DriveSample {
    double timestamp = 0.0;  // seconds since epoch, fractional allowed
    double lat = 0.0;        // degrees, [-90, 90]
    double lon = 0.0;        // degrees, [-180, 180]
    std::optional<double> rsrp_dbm;
    std::optional<double> snr_db;
    std::optional<int> beam_id;  // non-negative
    std::optional<int> rank;     // >= 1
    std::optional<double> throughput_mbps;  // >= 0

    bool lost() const { return !rsrp_dbm.has_value(); }
};

/// Throws DomainError if the sample violates field bounds or the
/// lost-packet completeness rule.
void validate_sample(const DriveSample& s);

/// Ordered sequence of samples from one drive. Ingestion sorts by
/// timestamp (stable, so simultaneous samples keep input order).
struct DriveTrace {
    std::vector<DriveSample> samples;
    std::string band_label;
    std::string source;  // provenance, e.g. the ingested file path
};

/// Throws DomainError if timestamps are not nondecreasing or any sample
/// is invalid.
void validate_trace(const DriveTrace& t);

/// Per-band system parameters (transmit power, numerology, beam grid).
struct BandConfig {
    double center_frequency_mhz = 0.0;
    double bandwidth_mhz = 0.0;
    double eirp_dbm = 0.0;
    double scs_khz = 0.0;  // subcarrier spacing
    int max_resource_blocks = 0;
    int subcarriers_per_rb = 12;
    double h_beamwidth_deg = 0.0;
    double v_beamwidth_deg = 0.0;
    std::vector<double> beam_angles_deg;  // azimuth central angles, ascending
};

/// Returns cfg unchanged iff the resource-block grid fits in the
/// configured bandwidth and the beam set is non-empty, strictly
/// ascending and pairwise distinct.
/// Throws BandwidthOverflow or UnsortedBeams otherwise.
BandConfig validate_band_config(const BandConfig& cfg);

}  // namespace beamtrace
