// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "beamtrace/gamma_model.hpp"
#include "beamtrace/trace.hpp"
#include "beamtrace/transitions.hpp"

namespace beamtrace {

/// Sampling path for synthetic traces: a waypoint polyline walked at a
/// fixed along-path spacing.
struct Trajectory {
    std::vector<std::pair<double, double>> waypoints;  // (lat, lon) degrees
    double step_m = 2.0;
    double speed_mps = 10.0;  // converts path distance to timestamps
};

void validate_trajectory(const Trajectory& t);

/// Transmitter site for the link-budget layer.
struct BsSite {
    double lat = 0.0;
    double lon = 0.0;
    double height_m = 12.0;
    double ue_height_m = 1.5;
};

/// Everything the generator needs: segment-length law, beam-transition law,
/// band parameters, shadowing, and the seed all randomness flows from.
struct SynthesisSpec {
    GammaParams gamma;             // SSR segment lengths, meters
    TransitionModel transitions;   // adjacency-order change law
    BandConfig band;
    double shadowing_sigma_db = 0.0;
    std::uint64_t seed = 0;
    bool reflect_at_edges = true;  // see simulate_beam_trace
    std::string band_label = "synthetic";
};

void validate_synthesis_spec(const SynthesisSpec& spec);

struct SimulationStats {
    std::uint64_t segments_drawn = 0;
    double mean_segment_m = 0.0;
};

/// Walks the trajectory at step spacing. Segment lengths are drawn from
/// spec.gamma and consumed in path distance; at each segment end an
/// adjacency order k is drawn from the transition law and the beam moves to
/// a uniformly chosen valid index at distance k. When neither direction
/// stays on the array, the move reflects at the array ends (targets that
/// would land back on the current beam are discarded); with reflection
/// disabled that situation raises InfeasibleAdjacency. The initial beam is
/// uniform over the band's beam set. Samples carry only position, time and
/// beam_id; compose with synthesize_rsrp for a serializable trace.
DriveTrace simulate_beam_trace(const Trajectory& traj, const SynthesisSpec& spec,
                               SimulationStats* stats = nullptr);

/// 20 log10(d_km) + 20 log10(f_MHz) + 32.44. Throws DomainError for
/// non-positive distance or frequency.
double free_space_path_loss_db(double d_m, double f_mhz);

/// rsrp = EIRP - FSPL(3-D distance) - shadowing. Shadowing is zero-mean
/// normal with spec.shadowing_sigma_db, smoothed along the path by an
/// exponential (AR-1) filter whose decorrelation length is the gamma mean
/// shape*scale — a documented heuristic, not measured physics.
DriveTrace synthesize_rsrp(const Trajectory& traj, const SynthesisSpec& spec,
                           const BsSite& bs);

/// Full generator used by the CLI: beam chain plus link budget on the same
/// walk (sub-seeded from spec.seed), with snr = rsrp - thermal noise floor
/// over one subcarrier. Produces traces that satisfy the lost-packet
/// invariant and serialize to the canonical CSV.
DriveTrace synthesize_drive_trace(const Trajectory& traj, const SynthesisSpec& spec,
                                  const BsSite& bs);

/// Per-subcarrier thermal noise floor used for synthetic snr, dBm.
double noise_floor_dbm(const BandConfig& band);

}  // namespace beamtrace
