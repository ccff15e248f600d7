// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace beamtrace {

/// Kolmogorov-Smirnov statistic
///   D = max_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|)
/// over the sorted samples. Throws EmptySample.
double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf);

/// Asymptotic critical value 1.358 / sqrt(n) at level 0.05 (the only level
/// this library reports). Throws EmptySample for n = 0, DomainError for any
/// other level.
double ks_critical(std::size_t n, double level = 0.05);

}  // namespace beamtrace
