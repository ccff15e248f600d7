// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/rank.hpp"

#include "beamtrace/errors.hpp"

namespace beamtrace {

RankTable rank_occurrence(const DriveTrace& trace) {
    RankTable t;
    for (const DriveSample& s : trace.samples) {
        if (!s.rank) continue;
        ++t.counts[*s.rank];
        ++t.n;
    }
    if (t.n == 0) throw NoRankData();
    for (const auto& [rank, count] : t.counts)
        t.probabilities[rank] = static_cast<double>(count) / static_cast<double>(t.n);
    return t;
}

double prob_rank_above(const RankTable& t, int k) {
    double p = 0.0;
    for (const auto& [rank, prob] : t.probabilities)
        if (rank > k) p += prob;
    return p;
}

}  // namespace beamtrace
