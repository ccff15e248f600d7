// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/rng.hpp"

#include <cmath>

#include "beamtrace/errors.hpp"

namespace beamtrace {

double SplitMix64::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = next_unit_pos();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925 * u2;  // 2 pi
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

double SplitMix64::next_gamma(const GammaParams& p) {
    validate_gamma_params(p);
    double shape = p.shape;
    double boost = 1.0;
    if (shape < 1.0) {
        // G(a) = G(a + 1) * U^(1/a)
        boost = std::pow(next_unit_pos(), 1.0 / shape);
        shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double z, v;
        do {
            z = next_normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_unit_pos();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2) return boost * d * v * p.scale_m;  // squeeze
        if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v)))
            return boost * d * v * p.scale_m;
    }
}

std::vector<double> generate_ssr_samples(const GammaParams& p, std::size_t n,
                                         std::uint64_t seed) {
    if (n == 0) throw DomainError("need n >= 1 samples");
    SplitMix64 rng(seed);
    std::vector<double> out(n);
    for (double& v : out) v = rng.next_gamma(p);
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 rng(master ^ (0xA5A5A5A55A5A5A5Aull * (stream + 1)));
    return rng.next_u64();
}

}  // namespace beamtrace
