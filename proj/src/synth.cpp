// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/synth.hpp"

#include <cmath>

#include "beamtrace/errors.hpp"
#include "beamtrace/geo.hpp"
#include "beamtrace/rng.hpp"

namespace beamtrace {

void validate_trajectory(const Trajectory& t) {
    if (t.waypoints.size() < 2) throw DomainError("trajectory needs at least two waypoints");
    if (!(t.step_m > 0.0)) throw DomainError("trajectory step must be > 0");
    if (!(t.speed_mps > 0.0)) throw DomainError("trajectory speed must be > 0");
    for (const auto& [lat, lon] : t.waypoints) {
        if (!(lat >= -90.0 && lat <= 90.0)) throw DomainError("waypoint latitude out of bounds");
        if (!(lon >= -180.0 && lon <= 180.0)) throw DomainError("waypoint longitude out of bounds");
    }
}

void validate_synthesis_spec(const SynthesisSpec& spec) {
    validate_gamma_params(spec.gamma);
    validate_band_config(spec.band);
    if (!(spec.shadowing_sigma_db >= 0.0)) throw DomainError("shadowing sigma must be >= 0");
    if (spec.transitions.p_change_given_change.empty())
        throw DomainError("synthesis spec has no transition probabilities");
    const int k_beams = static_cast<int>(spec.band.beam_angles_deg.size());
    for (const auto& [k, p] : spec.transitions.p_change_given_change)
        if (k < 1 || k > k_beams - 1)
            throw DomainError("transition adjacency order " + std::to_string(k) +
                              " infeasible for a " + std::to_string(k_beams) + "-beam set");
}

namespace {

// Sample positions every step_m of along-path distance, linearly
// interpolated inside each waypoint segment.
struct Walk {
    std::vector<double> lat, lon, path_m;
};

Walk walk_trajectory(const Trajectory& t) {
    validate_trajectory(t);
    const std::size_t n_way = t.waypoints.size();
    std::vector<double> seg_len(n_way - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n_way; ++i) {
        seg_len[i] = haversine_m(t.waypoints[i].first, t.waypoints[i].second,
                                 t.waypoints[i + 1].first, t.waypoints[i + 1].second);
        total += seg_len[i];
    }
    if (!(total > 0.0)) throw DomainError("trajectory has zero length");

    Walk w;
    std::size_t seg = 0;
    double seg_start = 0.0;
    for (double d = 0.0; d <= total; d += t.step_m) {
        while (seg + 1 < seg_len.size() && d > seg_start + seg_len[seg]) {
            seg_start += seg_len[seg];
            ++seg;
        }
        const double f = seg_len[seg] > 0.0 ? (d - seg_start) / seg_len[seg] : 0.0;
        const double fc = f > 1.0 ? 1.0 : f;
        w.lat.push_back(t.waypoints[seg].first +
                        fc * (t.waypoints[seg + 1].first - t.waypoints[seg].first));
        w.lon.push_back(t.waypoints[seg].second +
                        fc * (t.waypoints[seg + 1].second - t.waypoints[seg].second));
        w.path_m.push_back(d);
    }
    return w;
}

int draw_adjacency_order(const TransitionModel& m, SplitMix64& rng) {
    const double u = rng.next_unit();
    double cum = 0.0;
    int last = 1;
    for (const auto& [k, p] : m.p_change_given_change) {
        cum += p;
        last = k;
        if (u < cum) return k;
    }
    return last;  // guard against rounding at u ~ 1
}

int reflect_index(int j, int k_beams) {
    if (j < 0) return -j;
    if (j > k_beams - 1) return 2 * (k_beams - 1) - j;
    return j;
}

int next_beam(int current, int k, int k_beams, bool reflect, SplitMix64& rng) {
    const int down = current - k;
    const int up = current + k;
    const bool down_ok = down >= 0;
    const bool up_ok = up <= k_beams - 1;
    if (down_ok && up_ok) return rng.next_unit() < 0.5 ? down : up;
    if (down_ok) return down;
    if (up_ok) return up;
    if (!reflect)
        throw InfeasibleAdjacency("no beam at index distance " + std::to_string(k) +
                                  " from beam " + std::to_string(current));
    const int rdown = reflect_index(down, k_beams);
    const int rup = reflect_index(up, k_beams);
    const bool rdown_ok = rdown != current;
    const bool rup_ok = rup != current;
    if (rdown_ok && rup_ok && rdown != rup) return rng.next_unit() < 0.5 ? rdown : rup;
    if (rdown_ok) return rdown;
    if (rup_ok) return rup;
    throw InfeasibleAdjacency("reflected move at distance " + std::to_string(k) +
                              " from beam " + std::to_string(current) +
                              " lands on itself");
}

}  // namespace

DriveTrace simulate_beam_trace(const Trajectory& traj, const SynthesisSpec& spec,
                               SimulationStats* stats) {
    validate_synthesis_spec(spec);
    const Walk w = walk_trajectory(traj);
    const int k_beams = static_cast<int>(spec.band.beam_angles_deg.size());

    SplitMix64 rng(spec.seed);
    int beam = static_cast<int>(rng.next_unit() * k_beams);
    if (beam >= k_beams) beam = k_beams - 1;
    std::uint64_t drawn = 1;
    double drawn_total = rng.next_gamma(spec.gamma);
    double segment_end = drawn_total;

    DriveTrace trace;
    trace.band_label = spec.band_label;
    trace.samples.reserve(w.lat.size());
    for (std::size_t i = 0; i < w.lat.size(); ++i) {
        while (w.path_m[i] >= segment_end) {
            beam = next_beam(beam, draw_adjacency_order(spec.transitions, rng), k_beams,
                             spec.reflect_at_edges, rng);
            const double len = rng.next_gamma(spec.gamma);
            segment_end += len;
            drawn_total += len;
            ++drawn;
        }
        DriveSample s;
        s.timestamp = w.path_m[i] / traj.speed_mps;
        s.lat = w.lat[i];
        s.lon = w.lon[i];
        s.beam_id = beam;
        trace.samples.push_back(s);
    }
    if (stats) {
        stats->segments_drawn = drawn;
        stats->mean_segment_m = drawn_total / static_cast<double>(drawn);
    }
    return trace;
}

double free_space_path_loss_db(double d_m, double f_mhz) {
    if (!(d_m > 0.0)) throw DomainError("fspl requires distance > 0");
    if (!(f_mhz > 0.0)) throw DomainError("fspl requires frequency > 0");
    return 20.0 * std::log10(d_m / 1000.0) + 20.0 * std::log10(f_mhz) + 32.44;
}

double noise_floor_dbm(const BandConfig& band) {
    // thermal noise over one subcarrier: -174 dBm/Hz + 10 log10(scs)
    return -174.0 + 10.0 * std::log10(band.scs_khz * 1e3);
}

DriveTrace synthesize_rsrp(const Trajectory& traj, const SynthesisSpec& spec,
                           const BsSite& bs) {
    validate_synthesis_spec(spec);
    const Walk w = walk_trajectory(traj);
    const double dz = bs.height_m - bs.ue_height_m;
    const double d_cor = spec.gamma.mean();  // decorrelation length heuristic
    const double rho = std::exp(-traj.step_m / d_cor);
    const double innovation = std::sqrt(1.0 - rho * rho);

    SplitMix64 rng(spec.seed);
    double shadow = spec.shadowing_sigma_db * rng.next_normal();

    DriveTrace trace;
    trace.band_label = spec.band_label;
    trace.samples.reserve(w.lat.size());
    for (std::size_t i = 0; i < w.lat.size(); ++i) {
        if (i > 0)
            shadow = rho * shadow +
                     innovation * spec.shadowing_sigma_db * rng.next_normal();
        const double dh = haversine_m(w.lat[i], w.lon[i], bs.lat, bs.lon);
        const double d3 = std::hypot(dh, dz);
        DriveSample s;
        s.timestamp = w.path_m[i] / traj.speed_mps;
        s.lat = w.lat[i];
        s.lon = w.lon[i];
        s.rsrp_dbm = spec.band.eirp_dbm -
                     free_space_path_loss_db(d3, spec.band.center_frequency_mhz) - shadow;
        trace.samples.push_back(s);
    }
    return trace;
}

DriveTrace synthesize_drive_trace(const Trajectory& traj, const SynthesisSpec& spec,
                                  const BsSite& bs) {
    SynthesisSpec beams_spec = spec;
    beams_spec.seed = derive_seed(spec.seed, 0);
    SynthesisSpec rsrp_spec = spec;
    rsrp_spec.seed = derive_seed(spec.seed, 1);

    DriveTrace trace = simulate_beam_trace(traj, beams_spec);
    const DriveTrace budget = synthesize_rsrp(traj, rsrp_spec, bs);
    const double floor = noise_floor_dbm(spec.band);
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        trace.samples[i].rsrp_dbm = budget.samples[i].rsrp_dbm;
        trace.samples[i].snr_db = *budget.samples[i].rsrp_dbm - floor;
    }
    return trace;
}

}  // namespace beamtrace
