// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/ecdf.hpp"

#include <algorithm>
#include <cmath>

#include "beamtrace/errors.hpp"
#include "beamtrace/kernels.hpp"

namespace beamtrace {

std::size_t EcdfCurve::n_total() const {
    // loss_fraction = n_lost / n_total and n_effective = n_total - n_lost
    if (points.empty()) return n_effective;
    return n_effective + static_cast<std::size_t>(
                             std::llround(loss_fraction / (1.0 - loss_fraction) *
                                          static_cast<double>(n_effective)));
}

EcdfCurve empirical_cdf_with_loss(std::span<const double> samples, std::size_t n_lost) {
    if (samples.empty() && n_lost == 0) throw EmptyInput();
    EcdfCurve c;
    c.n_effective = samples.size();
    const double n_total = static_cast<double>(samples.size() + n_lost);
    c.loss_fraction = static_cast<double>(n_lost) / n_total;
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    c.points.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        c.points.emplace_back(sorted[i],
                              c.loss_fraction + static_cast<double>(i + 1) / n_total);
    return c;
}

std::vector<double> cap_values(std::span<const double> samples, double cap_db) {
    std::vector<double> out(samples.begin(), samples.end());
    kernels::min_with(out, cap_db);
    return out;
}

double ecdf_quantile(const EcdfCurve& c, double q) {
    if (!(q > 0.0) || !(q <= 1.0)) throw DomainError("quantile requires q in (0, 1]");
    if (q <= c.loss_fraction || c.points.empty())
        throw QuantileInLossRegion("q = " + std::to_string(q) +
                                   " lies in the lost-packet region (loss fraction " +
                                   std::to_string(c.loss_fraction) + ")");
    // smallest point whose cumulative probability reaches q
    const auto it = std::lower_bound(
        c.points.begin(), c.points.end(), q,
        [](const std::pair<double, double>& pt, double v) { return pt.second < v; });
    if (it == c.points.end()) return c.points.back().first;  // q == 1 up to rounding
    return it->first;
}

double percentile_delta(const EcdfCurve& a, const EcdfCurve& b, double q) {
    return ecdf_quantile(a, q) - ecdf_quantile(b, q);
}

double fraction_above_threshold(std::span<const double> samples, std::size_t n_lost,
                                double thresh) {
    if (samples.empty() && n_lost == 0) throw EmptyInput();
    std::size_t above = 0;
    for (double v : samples)
        if (v > thresh) ++above;
    return static_cast<double>(above) / static_cast<double>(samples.size() + n_lost);
}

}  // namespace beamtrace
