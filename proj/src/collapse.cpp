// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/collapse.hpp"

#include <cmath>
#include <map>

#include "beamtrace/errors.hpp"
#include "beamtrace/geo.hpp"

namespace beamtrace {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Modal value over (value -> count); among equal counts the entry with the
// smallest tiebreak key wins.
template <typename Key>
std::optional<int> modal(const std::map<int, std::pair<std::size_t, Key>>& counts) {
    std::optional<int> best;
    std::size_t best_count = 0;
    Key best_key{};
    for (const auto& [value, entry] : counts) {
        const auto& [count, key] = entry;
        if (count > best_count || (count == best_count && best && key < best_key)) {
            best = value;
            best_count = count;
            best_key = key;
        }
    }
    return best;
}

DriveSample merge_run(const std::vector<DriveSample>& samples, std::size_t first,
                      std::size_t last) {
    const std::size_t n = last - first + 1;
    DriveSample out;
    out.timestamp = 0.5 * (samples[first].timestamp + samples[last].timestamp);

    double lat_sum = 0.0, lon_sum = 0.0;
    double rsrp_lin = 0.0, snr_lin = 0.0, tp_sum = 0.0;
    std::size_t n_rsrp = 0, n_snr = 0, n_tp = 0;
    std::map<int, std::pair<std::size_t, std::size_t>> beams;  // value -> (count, first index)
    std::map<int, std::pair<std::size_t, int>> ranks;          // value -> (count, value)

    for (std::size_t i = first; i <= last; ++i) {
        const DriveSample& s = samples[i];
        lat_sum += s.lat;
        lon_sum += s.lon;
        if (s.rsrp_dbm) {
            rsrp_lin += db_to_linear(*s.rsrp_dbm);
            ++n_rsrp;
        }
        if (s.snr_db) {
            snr_lin += db_to_linear(*s.snr_db);
            ++n_snr;
        }
        if (s.throughput_mbps) {
            tp_sum += *s.throughput_mbps;
            ++n_tp;
        }
        if (s.beam_id) {
            auto [it, inserted] = beams.try_emplace(*s.beam_id, 0, i);
            ++it->second.first;
        }
        if (s.rank) {
            auto [it, inserted] = ranks.try_emplace(*s.rank, 0, *s.rank);
            ++it->second.first;
        }
    }
    out.lat = lat_sum / static_cast<double>(n);
    out.lon = lon_sum / static_cast<double>(n);
    if (n_rsrp > 0) out.rsrp_dbm = linear_to_db(rsrp_lin / static_cast<double>(n_rsrp));
    if (n_snr > 0) out.snr_db = linear_to_db(snr_lin / static_cast<double>(n_snr));
    if (n_tp > 0) out.throughput_mbps = tp_sum / static_cast<double>(n_tp);
    out.beam_id = modal(beams);
    out.rank = modal(ranks);
    return out;
}

}  // namespace

DriveTrace collapse_static_clusters(const DriveTrace& trace, double radius_m) {
    if (radius_m < 0.0 || !std::isfinite(radius_m)) throw DomainError("radius must be >= 0");
    if (trace.samples.empty()) throw EmptyTrace();

    DriveTrace out;
    out.band_label = trace.band_label;
    out.source = trace.source;
    const auto& s = trace.samples;

    std::size_t first = 0;
    while (first < s.size()) {
        std::size_t last = first;
        while (last + 1 < s.size() &&
               haversine_m(s[first].lat, s[first].lon, s[last + 1].lat, s[last + 1].lon) <=
                   radius_m) {
            ++last;
        }
        if (last == first)
            out.samples.push_back(s[first]);  // singleton runs pass through bit-exact
        else
            out.samples.push_back(merge_run(s, first, last));
        first = last + 1;
    }
    return out;
}

}  // namespace beamtrace
