// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "beamtrace/errors.hpp"

namespace beamtrace {

TransitionModel estimate_transition_model(const DriveTrace& trace,
                                          std::span<const double> beam_angles_by_id,
                                          BeamGapPolicy policy) {
    const std::size_t k_beams = beam_angles_by_id.size();
    if (k_beams < 2) throw DomainError("need at least two beam angles");

    // rank_of_id[b] = position of beam b's angle in ascending order
    std::vector<std::size_t> order(k_beams);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return beam_angles_by_id[a] < beam_angles_by_id[b]; });
    std::vector<int> rank_of_id(k_beams);
    for (std::size_t r = 0; r < k_beams; ++r) {
        if (r > 0 && !(beam_angles_by_id[order[r]] > beam_angles_by_id[order[r - 1]]))
            throw DomainError("beam angles must be pairwise distinct");
        rank_of_id[order[r]] = static_cast<int>(r);
    }

    TransitionModel m;
    m.beam_angles_deg.assign(beam_angles_by_id.begin(), beam_angles_by_id.end());
    std::sort(m.beam_angles_deg.begin(), m.beam_angles_deg.end());
    for (int k = 1; k < static_cast<int>(k_beams); ++k) m.counts[k] = 0;

    int prev_rank = -1;
    bool have_prev = false;
    for (const DriveSample& s : trace.samples) {
        if (!s.beam_id) {
            if (policy == BeamGapPolicy::split) have_prev = false;
            continue;
        }
        const int id = *s.beam_id;
        if (id < 0 || static_cast<std::size_t>(id) >= k_beams)
            throw DomainError("beam id " + std::to_string(id) + " has no configured angle");
        const int rank = rank_of_id[static_cast<std::size_t>(id)];
        if (have_prev) {
            ++m.n_pairs;
            const int k = std::abs(rank - prev_rank);
            if (k > 0) {
                ++m.n_changes;
                ++m.counts[k];
            }
        }
        prev_rank = rank;
        have_prev = true;
    }

    if (m.n_changes == 0) throw NoTransitions();
    m.p_stay = static_cast<double>(m.n_pairs - m.n_changes) / static_cast<double>(m.n_pairs);
    for (const auto& [k, c] : m.counts)
        m.p_change_given_change[k] =
            static_cast<double>(c) / static_cast<double>(m.n_changes);
    return m;
}

double conditional_change_probability(const TransitionModel& m, int k) {
    if (m.p_change_given_change.empty()) throw NoTransitions();
    const auto it = m.p_change_given_change.find(k);
    if (it == m.p_change_given_change.end())
        throw DomainError("adjacency order " + std::to_string(k) + " outside 1..K-1");
    return it->second;
}

TransitionModel transition_model_from_probabilities(std::vector<double> beam_angles_sorted,
                                                    std::map<int, double> p_change) {
    const int k_beams = static_cast<int>(beam_angles_sorted.size());
    if (k_beams < 2) throw DomainError("need at least two beam angles");
    for (int i = 1; i < k_beams; ++i)
        if (!(beam_angles_sorted[i] > beam_angles_sorted[i - 1]))
            throw DomainError("beam angles must be strictly ascending");
    if (p_change.empty()) throw DomainError("no change probabilities given");
    double sum = 0.0;
    for (const auto& [k, p] : p_change) {
        if (k < 1 || k > k_beams - 1)
            throw DomainError("adjacency order " + std::to_string(k) + " outside 1..K-1");
        if (!(p >= 0.0) || !(p <= 1.0)) throw DomainError("probability outside [0, 1]");
        sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw DomainError("change probabilities must sum to 1 within 1e-12");

    TransitionModel m;
    m.beam_angles_deg = std::move(beam_angles_sorted);
    for (int k = 1; k < k_beams; ++k) {
        m.counts[k] = 0;
        const auto it = p_change.find(k);
        m.p_change_given_change[k] = (it == p_change.end()) ? 0.0 : it->second;
    }
    return m;
}

}  // namespace beamtrace
