// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <cmath>
#include <doctest.h>
#include <vector>

#include "beamtrace/errors.hpp"
#include "beamtrace/gamma_model.hpp"
#include "beamtrace/rng.hpp"
#include "oracles.hpp"

using namespace beamtrace;

TEST_CASE("pdf reduces to the exponential at shape 1") {
    CHECK(gamma_pdf(1.0, {1.0, 1.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("pdf rises from zero for shape > 1") {
    CHECK(gamma_pdf(1e-12, {2.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-11));
    CHECK(gamma_pdf(1e-12, {2.0, 1.0}) < 1e-11);
}

TEST_CASE("pdf matches the frozen closed-form value at the fitted parameters") {
    CHECK(gamma_pdf(10.0, {0.62, 55.6}) ==
          doctest::Approx(oracle::ref::kGammaPdf10).epsilon(1e-10));
}

TEST_CASE("pdf/cdf domain errors") {
    CHECK_THROWS_AS(gamma_pdf(0.0, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(gamma_pdf(-1.0, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(gamma_cdf(0.0, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(gamma_quantile(0.0, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(gamma_quantile(1.0, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(gamma_pdf(1.0, {-1.0, 1.0}), DomainError);
}

TEST_CASE("cdf of the unit exponential at ln 2 is one half") {
    CHECK(gamma_cdf(std::log(2.0), {1.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("cdf is monotone with limits 0 and 1") {
    const GammaParams p{0.62, 55.6};
    double prev = 0.0;
    for (double x = 0.5; x < 2000.0; x *= 1.3) {
        const double c = gamma_cdf(x, p);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(gamma_cdf(1e-12, p) < 1e-6);
    CHECK(gamma_cdf(1e5, p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quantile/cdf round-trip to 1e-8 over random parameters") {
    SplitMix64 rng(2001);
    for (int i = 0; i < 100; ++i) {
        const GammaParams p{0.3 + rng.next_unit() * 4.7, 0.1 + rng.next_unit() * 100.0};
        const double x = p.scale_m * (0.05 + rng.next_unit() * 3.0 * p.shape);
        const double q = gamma_cdf(x, p);
        if (q <= 1e-12 || q >= 1.0 - 1e-12) continue;
        const double back = gamma_quantile(q, p);
        CHECK(std::fabs(back - x) <= 1e-8 * x);
    }
}

TEST_CASE("fitted-model quantiles verified against the quadrature oracle") {
    const GammaParams scale_reading{0.62, 55.6};
    const double median = gamma_quantile(0.5, scale_reading);
    const double p90 = gamma_quantile(0.9, scale_reading);
    CHECK(median == doctest::Approx(oracle::ref::kGammaMedian).epsilon(1e-9));
    CHECK(p90 == doctest::Approx(oracle::ref::kGammaP90).epsilon(1e-9));
    // independent quadrature of the density puts the right mass below them
    CHECK(std::fabs(oracle::gamma_cdf_quadrature(median, 0.62, 55.6) - 0.5) <= 1e-8);
    CHECK(std::fabs(oracle::gamma_cdf_quadrature(p90, 0.62, 55.6) - 0.9) <= 1e-8);
}

TEST_CASE("pdf integrates to one (quadrature over random parameters)") {
    SplitMix64 rng(77);
    for (int i = 0; i < 20; ++i) {
        const GammaParams p{0.3 + rng.next_unit() * 4.7, 0.2 + rng.next_unit() * 80.0};
        const double hi = gamma_quantile(1.0 - 1e-10, p);
        const double mass = oracle::integrate_pdf_substituted(
            [&](double x) { return gamma_pdf(x, p); }, p.shape, 1e-280, hi);
        CHECK(std::fabs(mass - 1.0) <= 1e-6);
    }
}

TEST_CASE("MLE on {1,2,3,4,5} matches an independent generic maximizer") {
    const std::vector<double> x = {1.0, 2.0, 3.0, 4.0, 5.0};
    const GammaParams fit = fit_gamma_mle(x);
    CHECK(fit.shape == doctest::Approx(oracle::ref::kMle12345Shape).epsilon(1e-6));
    CHECK(fit.scale_m == doctest::Approx(oracle::ref::kMle12345Scale).epsilon(1e-6));

    // re-run the generic simplex maximizer in-process as well
    auto nll = [&](double shape, double scale) {
        if (shape <= 0.0 || scale <= 0.0) return 1e300;
        double acc = 0.0;
        for (double v : x)
            acc -= (shape - 1.0) * std::log(v) - v / scale - std::lgamma(shape) -
                   shape * std::log(scale);
        return acc;
    };
    const auto [a, t] = oracle::nelder_mead_2d(nll, 3.0, 1.0);
    CHECK(fit.shape == doctest::Approx(a).epsilon(1e-5));
    CHECK(fit.scale_m == doctest::Approx(t).epsilon(1e-5));
}

TEST_CASE("MLE degenerate and domain errors") {
    const std::vector<double> equal = {3.3, 3.3, 3.3};
    CHECK_THROWS_AS(fit_gamma_mle(equal), DegenerateSample);
    const std::vector<double> one = {3.3};
    CHECK_THROWS_AS(fit_gamma_mle(one), DegenerateSample);
    const std::vector<double> bad = {1.0, -2.0};
    CHECK_THROWS_AS(fit_gamma_mle(bad), DomainError);
}

TEST_CASE("MLE stationarity: finite-difference gradient vanishes at the fit") {
    SplitMix64 rng(333);
    for (int rep = 0; rep < 5; ++rep) {
        const GammaParams truth{0.4 + rng.next_unit() * 3.0, 1.0 + rng.next_unit() * 60.0};
        const std::vector<double> x = generate_ssr_samples(truth, 4000, 1000 + rep);
        const GammaParams fit = fit_gamma_mle(x);

        auto loglik = [&](double shape, double scale) {
            double acc = 0.0;
            for (double v : x)
                acc += (shape - 1.0) * std::log(v) - v / scale;
            acc -= static_cast<double>(x.size()) *
                   (std::lgamma(shape) + shape * std::log(scale));
            return acc / static_cast<double>(x.size());  // per-sample scale
        };
        const double ha = 1e-6 * fit.shape;
        const double ht = 1e-6 * fit.scale_m;
        const double ga = (loglik(fit.shape + ha, fit.scale_m) -
                           loglik(fit.shape - ha, fit.scale_m)) /
                          (2.0 * ha);
        const double gt = (loglik(fit.shape, fit.scale_m + ht) -
                           loglik(fit.shape, fit.scale_m - ht)) /
                          (2.0 * ht);
        CHECK(std::fabs(ga) <= 1e-4);
        CHECK(std::fabs(gt) <= 1e-4);
    }
}
