// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beamtrace/ssr.hpp"

namespace beamtrace {

/// Lognormal in log-space mean/sigma; exact MLE on the log data.
struct LognormalParams {
    double mu = 0.0;
    double sigma = 1.0;  // > 0
};

/// Beta distribution fitted to the sample scaled by 1.001 * max so every
/// point lands strictly inside (0, 1).
struct BetaParams {
    double alpha = 1.0;
    double beta = 1.0;
    double scale_m = 1.0;  // the 1.001 * max normalization constant
};

LognormalParams fit_lognormal_mle(std::span<const double> x);
BetaParams fit_beta_mle(std::span<const double> x);

double lognormal_cdf(double x, const LognormalParams& p);
double beta_cdf(double x, const BetaParams& p);  // x in original units

/// One candidate's goodness-of-fit row. A candidate whose fitter failed is
/// recorded with ok = false and does not compete for the winner slot.
struct CandidateFit {
    std::string name;  // "gamma", "lognormal", "beta"
    std::vector<std::pair<std::string, double>> params;
    double ks_d = 1.0;
    std::size_t n = 0;
    double ks_critical_05 = 0.0;
    bool within_critical = false;
    bool ok = false;
    std::string error;
};

struct FitReport {
    std::vector<CandidateFit> candidates;
    std::string winner;  // smallest D among ok candidates
};

/// Fits gamma (MLE), lognormal (exact MLE on logs) and beta (MLE on the
/// normalized sample), ranks them by KS statistic. A failed candidate is
/// recorded, not fatal; if every candidate fails, throws EmptyReport.
FitReport fit_candidates(const SsrSampleSet& s);

}  // namespace beamtrace
