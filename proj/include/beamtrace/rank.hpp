// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>

#include "beamtrace/trace.hpp"

namespace beamtrace {

/// Channel-rank occurrence frequencies over the rank-bearing samples of a
/// trace. Lost packets are excluded: rank is undefined when nothing was
/// decoded.
struct RankTable {
    std::map<int, double> probabilities;  // rank -> occurrence probability
    std::map<int, std::uint64_t> counts;
    std::uint64_t n = 0;
};

/// Throws NoRankData when no sample carries a rank.
RankTable rank_occurrence(const DriveTrace& trace);

/// P[rank > k] = sum of probabilities for ranks strictly above k.
double prob_rank_above(const RankTable& t, int k);

}  // namespace beamtrace
