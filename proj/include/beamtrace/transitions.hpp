// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "beamtrace/ssr.hpp"
#include "beamtrace/trace.hpp"

namespace beamtrace {

/// Beam-change statistics by adjacency order. Adjacency order k is the
/// index distance between two beams in the angle-sorted beam list; "first
/// adjacent" means k = 1.
struct TransitionModel {
    std::vector<double> beam_angles_deg;          // ascending
    std::map<int, double> p_change_given_change;  // k in 1..K-1, sums to 1
    std::map<int, std::uint64_t> counts;          // raw change counts per k
    double p_stay = 0.0;                          // per consecutive pair, informational
    std::uint64_t n_pairs = 0;
    std::uint64_t n_changes = 0;
};

/// Walks consecutive beam observations; a change between beams whose
/// angle-sorted indices differ by k increments counts[k]. `beam_angles_by_id`
/// gives each beam id's central angle (index = beam id), in any order; the
/// adjacency metric is always the angle-sorted index distance, so relabeling
/// beams in a way that preserves angle order does not change the model.
/// Under BeamGapPolicy::split only directly adjacent samples form pairs.
/// Throws NoTransitions when no beam change is observed (all counts would
/// be zero), DomainError on unmappable beam ids or duplicate angles.
TransitionModel estimate_transition_model(const DriveTrace& trace,
                                          std::span<const double> beam_angles_by_id,
                                          BeamGapPolicy policy = BeamGapPolicy::bridge);

/// p_change_given_change(k); equals the ratio of the joint probability of
/// changing to the k-th adjacent beam over the total change probability.
/// Throws NoTransitions on a model with no change data, DomainError for k
/// outside 1..K-1.
double conditional_change_probability(const TransitionModel& m, int k);

/// Builds a model directly from target probabilities (synthesis configs).
/// Validates each p in [0, 1] and sum == 1 within 1e-12.
TransitionModel transition_model_from_probabilities(std::vector<double> beam_angles_sorted,
                                                    std::map<int, double> p_change);

}  // namespace beamtrace
