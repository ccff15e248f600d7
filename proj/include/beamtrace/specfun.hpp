// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

namespace beamtrace {

/// Digamma psi(x) for x > 0: upward recurrence to x >= 6, then the
/// asymptotic expansion through the x^-14 term. |error| <= 1e-12 on
/// [1e-3, 1e6]. Throws DomainError for x <= 0.
double digamma(double x);

/// Trigamma psi'(x) for x > 0, same recurrence/asymptotic scheme.
/// Throws DomainError for x <= 0.
double trigamma(double x);

/// Regularized lower incomplete gamma P(a, x): series expansion for
/// x < a + 1, continued fraction otherwise, 200-iteration budget.
/// Throws DomainError (a <= 0 or x < 0) and NonConvergence.
double reg_lower_gamma(double a, double x);

/// Regularized incomplete beta I_x(a, b) by the symmetric continued
/// fraction, 200-iteration budget.
/// Throws DomainError and NonConvergence.
double reg_inc_beta(double a, double b, double x);

/// Standard normal CDF.
double normal_cdf(double z);

}  // namespace beamtrace
