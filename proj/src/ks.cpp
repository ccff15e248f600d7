// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/ks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "beamtrace/errors.hpp"

namespace beamtrace {

double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw EmptySample();
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        const double hi = std::fabs(static_cast<double>(i + 1) / n - f);
        const double lo = std::fabs(static_cast<double>(i) / n - f);
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

double ks_critical(std::size_t n, double level) {
    if (n == 0) throw EmptySample();
    if (level != 0.05) throw DomainError("only the 0.05 level is supported");
    return 1.358 / std::sqrt(static_cast<double>(n));
}

}  // namespace beamtrace
