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

#include <catch2/catch_amalgamated.hpp>
#include "crancap/special.hpp"

#include <cmath>
#include <numbers>

using namespace crancap;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Integer shape: P(a, b) = 1 - e^{-b} sum_{k<a} b^k / k!
double integer_shape_regularized(int a, double b)
{
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < a; ++k) {
        sum += term;
        term *= b / (k + 1);
    }
    return 1.0 - std::exp(-b) * sum;
}

}  // namespace

TEST_CASE("lower incomplete gamma edge values")
{
    CHECK(lower_incomplete_gamma(1.0, 0.0) == 0.0);
    CHECK(lower_incomplete_gamma(3.5, 0.0) == 0.0);
    for (double b : {1e-6, 0.1, 1.0, 5.0, 40.0})
        CHECK_THAT(lower_incomplete_gamma(1.0, b), WithinRel(-std::expm1(-b), 1e-13));
    CHECK_THAT(lower_incomplete_gamma(2.5, INFINITY), WithinRel(std::tgamma(2.5), 1e-14));
    CHECK_THROWS(lower_incomplete_gamma(0.0, 1.0));
    CHECK_THROWS(lower_incomplete_gamma(1.0, -1.0));
}

TEST_CASE("regularized gamma against integer-shape closed form")
{
    CHECK_THAT(regularized_lower_gamma(4, 5), WithinAbs(integer_shape_regularized(4, 5), 1e-12));
    for (int a : {1, 2, 3, 4, 8, 16})
        for (double b : {0.01, 0.5, 1.0, 3.0, 7.5, 20.0, 60.0}) {
            CAPTURE(a, b);
            CHECK_THAT(regularized_lower_gamma(a, b), WithinAbs(integer_shape_regularized(a, b), 1e-13));
        }
}

TEST_CASE("lower plus upper incomplete gamma equals gamma")
{
    for (double a : {1.0, 2.0, 4.0, 8.0})
        for (double b : {0.1, 1.0, 10.0}) {
            CAPTURE(a, b);
            const double sum = lower_incomplete_gamma(a, b) + upper_incomplete_gamma(a, b);
            CHECK_THAT(sum, WithinAbs(std::tgamma(a), 1e-10 * std::tgamma(a)));
            CHECK_THAT(regularized_lower_gamma(a, b) + regularized_upper_gamma(a, b), WithinAbs(1.0, 1e-14));
        }
}

TEST_CASE("lower incomplete gamma is monotone in b")
{
    for (double a : {0.5, 1.0, 2.7, 6.0}) {
        double prev = 0.0;
        for (double b = 0.0; b < 30.0; b += 0.25) {
            const double v = lower_incomplete_gamma(a, b);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(prev <= std::tgamma(a));
    }
}

TEST_CASE("half-integer shape against erf")
{
    for (double b : {0.01, 0.3, 2.0, 9.0})
        CHECK_THAT(regularized_lower_gamma(0.5, b), WithinAbs(std::erf(std::sqrt(b)), 1e-14));
}

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic_number(0) == 0.0);
    CHECK(harmonic_number(1) == 1.0);
    CHECK_THAT(harmonic_number(3), WithinRel(11.0 / 6.0, 1e-15));
    CHECK_THAT(harmonic_number(7), WithinRel(363.0 / 140.0, 1e-15));
    CHECK_THROWS(harmonic_number(-1));
}

TEST_CASE("euler gamma constant")
{
    CHECK_THAT(euler_gamma(), WithinAbs(0.577215664901532860606, 1e-15));
    const int n = 1000000;
    CHECK_THAT(harmonic_number(n) - std::log(static_cast<double>(n)), WithinAbs(euler_gamma(), 1e-6));
    CHECK(euler_gamma() > 0.0);
    CHECK(euler_gamma() < 1.0);
}

TEST_CASE("capacity series")
{
    auto term = [](int j) { return 1.0 / ((j + 1.0) * (2.0 * j + 1.0)); };
    CHECK(term(0) == 1.0);
    double partial = 0;
    for (int j = 0; j <= 1; ++j)
        partial += term(j);
    CHECK_THAT(partial, WithinAbs(7.0 / 6.0, 1e-15));

    const auto full = capacity_series();
    CHECK_THAT(full.value, WithinAbs(2.0 * std::numbers::ln2, 1e-10));
    CHECK(full.remainder_bound < 1e-10);
    const auto short_sum = capacity_series(20);
    CHECK(short_sum.terms == 20);
    CHECK_THAT(short_sum.value, WithinAbs(2.0 * std::numbers::ln2, short_sum.remainder_bound + 1e-15));

    // telescoping: 1/((j+1)(2j+1)) = 2/(2j+1) - 1/(j+1); brute-force partial sum plus
    // the tail bound must bracket the analytic value
    double brute = 0;
    const int m = 200000;
    for (int j = m - 1; j >= 0; --j)
        brute += 2.0 / (2.0 * j + 1.0) - 1.0 / (j + 1.0);
    CHECK(brute < 2.0 * std::numbers::ln2);
    CHECK_THAT(brute, WithinAbs(2.0 * std::numbers::ln2, 1.0 / m));
}
