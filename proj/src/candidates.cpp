// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "beamtrace/errors.hpp"
#include "beamtrace/gamma_model.hpp"
#include "beamtrace/kernels.hpp"
#include "beamtrace/ks.hpp"
#include "beamtrace/specfun.hpp"

namespace beamtrace {

LognormalParams fit_lognormal_mle(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 2) throw DegenerateSample("lognormal fit needs at least two values");
    for (double v : x)
        if (!(v > 0.0)) throw DomainError("lognormal fit requires positive values");
    const double mu = kernels::sum_log(x) / static_cast<double>(n);
    double ss = 0.0;
    for (double v : x) {
        const double d = std::log(v) - mu;
        ss += d * d;
    }
    const double sigma = std::sqrt(ss / static_cast<double>(n));
    if (!(sigma > 0.0)) throw DegenerateSample("all values equal; zero log variance");
    return {mu, sigma};
}

double lognormal_cdf(double x, const LognormalParams& p) {
    if (!(x > 0.0)) throw DomainError("lognormal cdf defined for x > 0");
    return normal_cdf((std::log(x) - p.mu) / p.sigma);
}

BetaParams fit_beta_mle(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 2) throw DegenerateSample("beta fit needs at least two values");
    double max_v = 0.0;
    for (double v : x) {
        if (!(v > 0.0)) throw DomainError("beta fit requires positive values");
        max_v = std::max(max_v, v);
    }
    const double scale = 1.001 * max_v;

    // Sufficient statistics of the scaled sample.
    double sum_ly = 0.0, sum_l1y = 0.0, sum_y = 0.0, sum_y2 = 0.0;
    for (double v : x) {
        const double y = v / scale;
        sum_ly += std::log(y);
        sum_l1y += std::log1p(-y);
        sum_y += y;
        sum_y2 += y * y;
    }
    const double nn = static_cast<double>(n);
    const double g1 = sum_ly / nn;   // E[ln y]
    const double g2 = sum_l1y / nn;  // E[ln(1-y)]
    const double mean = sum_y / nn;
    double var = sum_y2 / nn - mean * mean;
    if (!(var > 0.0)) throw DegenerateSample("all values equal; zero variance");

    // Method-of-moments start, then Newton on the MLE system
    //   psi(a) - psi(a+b) = g1,  psi(b) - psi(a+b) = g2.
    const double common = mean * (1.0 - mean) / var - 1.0;
    double a = std::max(mean * common, 1e-3);
    double b = std::max((1.0 - mean) * common, 1e-3);
    for (int it = 0; it < 200; ++it) {
        const double psi_ab = digamma(a + b);
        const double f1 = digamma(a) - psi_ab - g1;
        const double f2 = digamma(b) - psi_ab - g2;
        const double tab = trigamma(a + b);
        const double j11 = trigamma(a) - tab;
        const double j22 = trigamma(b) - tab;
        const double j12 = -tab;
        const double det = j11 * j22 - j12 * j12;
        if (det == 0.0) throw NonConvergence("beta MLE Jacobian singular");
        double da = (f1 * j22 - f2 * j12) / det;
        double db = (f2 * j11 - f1 * j12) / det;
        // damp steps that would leave the domain
        while (a - da <= 0.0 || b - db <= 0.0) {
            da *= 0.5;
            db *= 0.5;
        }
        a -= da;
        b -= db;
        if (std::fabs(da) <= 1e-10 * a && std::fabs(db) <= 1e-10 * b)
            return {a, b, scale};
    }
    throw NonConvergence("beta MLE Newton iteration exceeded 200 steps");
}

double beta_cdf(double x, const BetaParams& p) {
    if (!(x > 0.0)) throw DomainError("beta cdf defined for x > 0");
    const double y = x / p.scale_m;
    if (y >= 1.0) return 1.0;
    return reg_inc_beta(p.alpha, p.beta, y);
}

FitReport fit_candidates(const SsrSampleSet& s) {
    const std::span<const double> x(s.distances_m);
    FitReport report;

    auto run = [&](const std::string& name, auto fit_and_cdf) {
        CandidateFit c;
        c.name = name;
        c.n = x.size();
        try {
            auto cdf = fit_and_cdf(c);
            c.ks_d = ks_statistic(x, cdf);
            c.ks_critical_05 = ks_critical(x.size());
            c.within_critical = c.ks_d < c.ks_critical_05;
            c.ok = true;
        } catch (const Error& e) {
            c.ok = false;
            c.error = e.what();
        }
        report.candidates.push_back(std::move(c));
    };

    run("gamma", [&](CandidateFit& c) {
        const GammaParams p = fit_gamma_mle(x);
        c.params = {{"shape", p.shape}, {"scale_m", p.scale_m}};
        return [p](double v) { return gamma_cdf(v, p); };
    });
    run("lognormal", [&](CandidateFit& c) {
        const LognormalParams p = fit_lognormal_mle(x);
        c.params = {{"mu", p.mu}, {"sigma", p.sigma}};
        return [p](double v) { return lognormal_cdf(v, p); };
    });
    run("beta", [&](CandidateFit& c) {
        const BetaParams p = fit_beta_mle(x);
        c.params = {{"alpha", p.alpha}, {"beta", p.beta}, {"scale_m", p.scale_m}};
        return [p](double v) { return beta_cdf(v, p); };
    });

    double best = std::numeric_limits<double>::infinity();
    for (const CandidateFit& c : report.candidates) {
        if (c.ok && c.ks_d < best) {
            best = c.ks_d;
            report.winner = c.name;
        }
    }
    if (report.winner.empty()) throw EmptyReport();
    return report;
}

}  // namespace beamtrace
