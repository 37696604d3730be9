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

#include "crancap/special.hpp"

#include "crancap/params.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace crancap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 100000;

void check_domain(double a, double b)
{
    if (!(a > 0.0) || std::isnan(b) || b < 0.0)
        throw ParamError("incomplete gamma domain: need a > 0, b >= 0 (a=" + std::to_string(a) +
                         ", b=" + std::to_string(b) + ")");
}

// Power series for P(a, b); converges fast for b < a + 1.
double series_p(double a, double b)
{
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        term *= b / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps)
            break;
    }
    return sum * std::exp(-b + a * std::log(b) - std::lgamma(a));
}

// Modified Lentz continued fraction for Q(a, b); used for b >= a + 1.
double continued_fraction_q(double a, double b)
{
    constexpr double tiny = 1e-300;
    double bb = b + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / bb;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        bb += 2.0;
        d = an * d + bb;
        if (std::abs(d) < tiny)
            d = tiny;
        c = bb + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            break;
    }
    return std::exp(-b + a * std::log(b) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_lower_gamma(double a, double b)
{
    check_domain(a, b);
    if (b == 0.0)
        return 0.0;
    if (std::isinf(b))
        return 1.0;
    if (b < a + 1.0)
        return series_p(a, b);
    return 1.0 - continued_fraction_q(a, b);
}

double regularized_upper_gamma(double a, double b)
{
    check_domain(a, b);
    if (b == 0.0)
        return 1.0;
    if (std::isinf(b))
        return 0.0;
    if (b < a + 1.0)
        return 1.0 - series_p(a, b);
    return continued_fraction_q(a, b);
}

double lower_incomplete_gamma(double a, double b)
{
    return regularized_lower_gamma(a, b) * std::tgamma(a);
}

double upper_incomplete_gamma(double a, double b)
{
    return regularized_upper_gamma(a, b) * std::tgamma(a);
}

double harmonic_number(int m)
{
    if (m < 0)
        throw ParamError("harmonic_number: m must be >= 0");
    double sum = 0.0;
    // smallest terms first
    for (int i = m; i >= 1; --i)
        sum += 1.0 / i;
    return sum;
}

SeriesValue capacity_series(std::size_t explicit_terms)
{
    if (explicit_terms < 10)
        explicit_terms = 10;

    // f(j) = 1/((j+1)(2j+1)) = 2/(2j+1) - 1/(j+1); k-th derivative in closed form.
    auto deriv = [](int k, double x) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double fact = std::tgamma(k + 1.0);
        return sign * fact * (2.0 * std::pow(2.0, k) / std::pow(2.0 * x + 1.0, k + 1) -
                              1.0 / std::pow(x + 1.0, k + 1));
    };

    double partial = 0.0;
    for (std::size_t j = explicit_terms; j-- > 0;) {
        const double jj = static_cast<double>(j);
        partial += 1.0 / ((jj + 1.0) * (2.0 * jj + 1.0));
    }

    // Euler-Maclaurin tail for sum_{j >= J} f(j).
    const double J = static_cast<double>(explicit_terms);
    const double tail_integral = std::log((J + 1.0) / (J + 0.5));  // int_J^inf f
    const double tail = tail_integral + 0.5 * deriv(0, J) - deriv(1, J) / 12.0 + deriv(3, J) / 720.0 -
                        deriv(5, J) / 30240.0;

    SeriesValue out;
    out.value = partial + tail;
    // next Euler-Maclaurin term bounds the truncation; add rounding of the partial sum
    out.remainder_bound = std::abs(deriv(7, J)) / 1209600.0 + 4.0 * kEps * out.value * std::sqrt(J);
    out.terms = explicit_terms;
    return out;
}

}  // namespace crancap
