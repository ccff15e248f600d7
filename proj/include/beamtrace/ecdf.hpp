// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace beamtrace {

/// Empirical CDF whose cumulative probability starts at the lost-packet
/// fraction, placing undecodable packets at the bottom of the distribution.
/// The i-th sorted sample (1-based) maps to loss_fraction + i / n_total.
struct EcdfCurve {
    std::vector<std::pair<double, double>> points;  // (value, cum. probability)
    double loss_fraction = 0.0;
    std::size_t n_effective = 0;  // valued samples; n_total = n_effective + lost

    std::size_t n_total() const;
};

/// Throws EmptyInput when both samples and n_lost are zero. With no valued
/// samples the curve degenerates to loss_fraction = 1 and no points.
EcdfCurve empirical_cdf_with_loss(std::span<const double> samples, std::size_t n_lost);

/// Elementwise min(v, cap). Order statistics below the cap are unchanged;
/// all excess mass lands exactly at the cap value.
std::vector<double> cap_values(std::span<const double> samples, double cap_db = 30.0);

/// Left-continuous inverse ECDF (lower quantile): the smallest value whose
/// cumulative probability reaches q. Throws QuantileInLossRegion when q
/// does not exceed the curve's loss fraction, DomainError for q outside
/// (0, 1].
double ecdf_quantile(const EcdfCurve& c, double q);

/// ecdf_quantile(a, q) - ecdf_quantile(b, q).
double percentile_delta(const EcdfCurve& a, const EcdfCurve& b, double q);

/// (#samples > thresh) / (n_lost + #samples); lost packets count as below
/// any threshold. Throws EmptyInput.
double fraction_above_threshold(std::span<const double> samples, std::size_t n_lost,
                                double thresh);

}  // namespace beamtrace
