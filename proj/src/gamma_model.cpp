// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/gamma_model.hpp"

#include <algorithm>
#include <cmath>

#include "beamtrace/errors.hpp"
#include "beamtrace/kernels.hpp"
#include "beamtrace/specfun.hpp"

namespace beamtrace {

void validate_gamma_params(const GammaParams& p) {
    if (!(p.shape > 0.0) || !std::isfinite(p.shape))
        throw DomainError("gamma shape must be positive and finite");
    if (!(p.scale_m > 0.0) || !std::isfinite(p.scale_m))
        throw DomainError("gamma scale must be positive and finite");
}

double gamma_pdf(double x, const GammaParams& p) {
    validate_gamma_params(p);
    if (!(x > 0.0)) throw DomainError("gamma pdf defined for x > 0");
    const double log_pdf = (p.shape - 1.0) * std::log(x) - x / p.scale_m -
                           std::lgamma(p.shape) - p.shape * std::log(p.scale_m);
    return std::exp(log_pdf);
}

double gamma_cdf(double x, const GammaParams& p) {
    validate_gamma_params(p);
    if (!(x > 0.0)) throw DomainError("gamma cdf defined for x > 0");
    return reg_lower_gamma(p.shape, x / p.scale_m);
}

double gamma_quantile(double q, const GammaParams& p) {
    validate_gamma_params(p);
    if (!(q > 0.0) || !(q < 1.0)) throw DomainError("quantile requires q in (0, 1)");

    // Bracket the root, expanding geometrically from the mean.
    double lo = p.scale_m * 1e-12;
    double hi = p.scale_m * std::max(p.shape, 1.0);
    int budget = 200;
    while (gamma_cdf(hi, p) < q) {
        hi *= 2.0;
        if (--budget == 0) throw NonConvergence("quantile bracket expansion failed");
    }
    while (gamma_cdf(lo, p) > q) {
        lo *= 0.5;
        if (--budget == 0) throw NonConvergence("quantile bracket expansion failed");
    }

    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 80; ++i) {
        if (gamma_cdf(x, p) < q)
            lo = x;
        else
            hi = x;
        x = 0.5 * (lo + hi);
    }
    // Newton polish on the CDF.
    for (int i = 0; i < 20; ++i) {
        const double err = gamma_cdf(x, p) - q;
        if (std::fabs(err) <= 1e-10) return x;
        const double step = err / gamma_pdf(x, p);
        double next = x - step;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (err > 0.0)
            hi = x;
        else
            lo = x;
        x = next;
    }
    if (std::fabs(gamma_cdf(x, p) - q) <= 1e-10) return x;
    throw NonConvergence("quantile iteration did not reach 1e-10");
}

GammaParams fit_gamma_mle(std::span<const double> distances_m) {
    const std::size_t n = distances_m.size();
    if (n < 2) throw DegenerateSample("gamma fit needs at least two values");
    bool distinct = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(distances_m[i] > 0.0)) throw DomainError("gamma fit requires positive values");
        if (distances_m[i] != distances_m[0]) distinct = true;
    }
    if (!distinct) throw DegenerateSample("all values equal; zero log-spread");

    const double mean = kernels::sum(distances_m) / static_cast<double>(n);
    const double mean_log = kernels::sum_log(distances_m) / static_cast<double>(n);
    const double s = std::log(mean) - mean_log;  // > 0 by Jensen unless degenerate
    if (!(s > 1e-12)) throw DegenerateSample("log-spread below numerical resolution");

    double a = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
    for (int i = 0; i < 100; ++i) {
        const double g = std::log(a) - digamma(a) - s;
        const double gp = 1.0 / a - trigamma(a);
        double step = g / gp;
        double next = a - step;
        while (next <= 0.0) {  // keep the iterate in the domain
            step *= 0.5;
            next = a - step;
        }
        const bool done = std::fabs(next - a) <= 1e-10 * a;
        a = next;
        if (done) return GammaParams{a, mean / a};
    }
    throw NonConvergence("gamma MLE Newton iteration exceeded 100 steps");
}

}  // namespace beamtrace
