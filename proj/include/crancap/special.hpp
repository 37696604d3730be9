// SPDX-License-Identifier: Apache-2.0
//
// crancap: uplink capacity analysis of RRH association in cloud RANs
// Copyright (C) 2026 The crancap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CRANCAP_SPECIAL_HPP
#define CRANCAP_SPECIAL_HPP

#include <cstddef>
#include <numbers>

namespace crancap {

/// Lower incomplete gamma, integral of u^(a-1) e^-u over [0, b].
double lower_incomplete_gamma(double a, double b);
/// Upper incomplete gamma, integral of u^(a-1) e^-u over [b, inf).
double upper_incomplete_gamma(double a, double b);
/// P(a, b) = lower_incomplete_gamma(a, b) / Gamma(a); the Gamma(a, 1) cdf at b.
double regularized_lower_gamma(double a, double b);
/// Q(a, b) = 1 - P(a, b), computed without cancellation.
double regularized_upper_gamma(double a, double b);

/// sum_{i=1}^{m} 1/i; zero for m = 0.
double harmonic_number(int m);

/// Euler-Mascheroni constant.
constexpr double euler_gamma() noexcept { return std::numbers::egamma; }

struct SeriesValue {
    double value = 0;
    double remainder_bound = 0;  // bound on |value - exact sum|
    std::size_t terms = 0;       // explicitly summed terms
};

/// sum_{j>=0} 1 / ((j+1)(2j+1)), the constant in the large-N capacity bound.
/// Partial sum plus an Euler-Maclaurin tail.
SeriesValue capacity_series(std::size_t explicit_terms = 2000);

}  // namespace crancap

#endif  // CRANCAP_SPECIAL_HPP
