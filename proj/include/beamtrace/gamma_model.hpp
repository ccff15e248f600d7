// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <span>

namespace beamtrace {

/// Gamma distribution in shape/scale form:
///   f(x) = x^(shape-1) exp(-x/scale) / (Gamma(shape) scale^shape),  x > 0.
/// The scale is in meters throughout this library (stationarity-region
/// distances).
struct GammaParams {
    double shape = 1.0;    // dimensionless, > 0
    double scale_m = 1.0;  // meters, > 0

    double mean() const { return shape * scale_m; }
};

/// Throws DomainError unless both parameters are strictly positive and finite.
void validate_gamma_params(const GammaParams& p);

/// Density at x > 0, evaluated in log space so large shapes/scales do not
/// overflow. Throws DomainError for x <= 0.
double gamma_pdf(double x, const GammaParams& p);

/// CDF at x > 0 via the regularized lower incomplete gamma P(shape, x/scale).
/// Throws DomainError for x <= 0.
double gamma_cdf(double x, const GammaParams& p);

/// Quantile for q in (0, 1): bracketed bisection then Newton polish until
/// |CDF(x) - q| <= 1e-10. Throws DomainError, NonConvergence.
double gamma_quantile(double q, const GammaParams& p);

/// Maximum-likelihood fit. Solves ln(a) - psi(a) = ln(mean) - mean(ln x) by
/// Newton iteration from the closed-form initializer
///   a0 = (3 - s + sqrt((s-3)^2 + 24 s)) / (12 s),
/// then scale = mean / a. Requires at least two distinct positive values.
/// Throws DegenerateSample (zero log-spread), NonConvergence, DomainError.
GammaParams fit_gamma_mle(std::span<const double> distances_m);

}  // namespace beamtrace
