// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "beamtrace/gamma_model.hpp"

namespace beamtrace {

/// SplitMix64: the generator pinned for every stochastic output of this
/// library. Counter-based — the state advances by a fixed odd constant and
/// each output is a finalizing hash of the counter — so sequences are
/// reproducible from the seed alone, independent of platform and standard
/// library. Distribution sampling (uniform, normal, gamma) is implemented
/// here rather than via <random> for the same reason.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; used where a log or a power of the draw must not
    /// hit zero.
    double next_unit_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; caches the paired variate.
    double next_normal();

    /// Gamma variate in shape/scale form. Shape >= 1 uses the
    /// Marsaglia-Tsang squeeze-accept method; shape < 1 uses the boost
    /// identity G(a) = G(a+1) * U^(1/a) on top of it.
    double next_gamma(const GammaParams& p);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// n independent gamma variates, deterministic for a fixed seed.
std::vector<double> generate_ssr_samples(const GammaParams& p, std::size_t n,
                                         std::uint64_t seed);

/// Derives independent sub-stream seeds from one master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace beamtrace
