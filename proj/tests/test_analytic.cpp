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
#include "crancap/analytic.hpp"
#include "crancap/geometry.hpp"
#include "crancap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

using namespace crancap;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
constexpr double inf = std::numeric_limits<double>::infinity();

SystemParams defaults()
{
    return build_params(RawParams{});
}

double simpson(const std::function<double(double)>& f, double a, double b, int n = 200000)
{
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

double gamma_cdf_int(int k, double x)
{
    double term = 1.0, sum = 0.0;
    for (int j = 0; j < k; ++j) {
        sum += term;
        term *= x / (j + 1);
    }
    return 1.0 - std::exp(-x) * sum;
}

// P(kappa L (x1^-2 + x2^-2) < u) for the normalized two nearest points,
// joint density e^{-x2} on 0 < x1 < x2, by direct Simpson in x2.
double mean_fading_two_oracle(double u, const SystemParams& p)
{
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    const double x0 = std::sqrt(2.0 * kl / u);
    return simpson([&](double t) {
        const double x = x0 + t;
        const double rem = u / kl - 1.0 / (x * x);
        if (rem <= 0)
            return 0.0;
        return std::exp(-x) * std::max(0.0, x - 1.0 / std::sqrt(rem));
    }, 0.0, 60.0);
}

struct PointSampler {
    std::mt19937_64 rng;
    std::exponential_distribution<double> exp1{1.0};

    // normalized x_i = pi lambda r_i^2 for the n nearest points
    std::vector<double> draw(int n)
    {
        std::vector<double> x(n);
        double acc = 0;
        for (auto& v : x)
            v = acc += exp1(rng);
        return x;
    }
};

}  // namespace

TEST_CASE("single outage limits and monotonicity")
{
    const auto p = defaults();
    CHECK(outage_single(0.0, p).value == 0.0);
    CHECK(outage_single(inf, p).value == 1.0);
    CHECK(outage_single(1e-6, p).value < 1e-9);
    CHECK_THAT(outage_single(1e22, p).value, WithinAbs(1.0, 1e-6));
    CHECK_THROWS_AS(outage_single(-1.0, p), ParamError);
    double prev = 0;
    for (double t = 1.0; t < 1e7; t *= 2.0) {
        const double v = outage_single(t, p).value;
        CHECK(v >= prev);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("single outage against closed forms")
{
    // L = 1: 1 - int e^{-a x^2 - x} dx = 1 - sqrt(pi/(4a)) e^{1/(4a)} erfc(1/(2 sqrt a)), a = T / kappa
    const auto p1 = defaults().with_num_antennas(1);
    const double kappa = p1.nearest_snr_scale();
    for (double f : {0.05, 0.3, 1.0, 4.0, 20.0}) {
        const double a = f;
        const double expect = 1.0 - std::sqrt(pi / (4 * a)) * std::exp(1 / (4 * a)) * std::erfc(1 / (2 * std::sqrt(a)));
        CAPTURE(f);
        CHECK_THAT(outage_single(f * kappa, p1).value, WithinAbs(expect, 1e-9));
    }
    // integer L by Simpson over the Poisson-sum cdf
    for (int L : {2, 4, 8}) {
        const auto p = defaults().with_num_antennas(L);
        for (double f : {0.1, 1.0, 10.0}) {
            const double t = f * p.nearest_snr_scale() * L;
            const double expect = simpson([&](double x) {
                return gamma_cdf_int(L, x * x * t / p.nearest_snr_scale()) * std::exp(-x);
            }, 0.0, 60.0);
            CAPTURE(L, f);
            CHECK_THAT(outage_single(t, p).value, WithinAbs(expect, 1e-9));
        }
    }
}

TEST_CASE("single snr density is the derivative of the outage")
{
    const auto p = defaults();
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    for (double f : {0.03, 0.1, 0.5, 1.0, 3.0, 30.0, 1e3}) {
        const double t = f * kl;
        const double h = 1e-4 * t;
        const double fd = (outage_single(t + h, p).value - outage_single(t - h, p).value) / (2 * h);
        CAPTURE(f);
        CHECK_THAT(snr_pdf_single(t, p).value, WithinRel(fd, 1e-3));
        CHECK(snr_pdf_single(t, p).value >= 0);
    }
    CHECK(snr_pdf_single(0.0, p).value == 0.0);
}

TEST_CASE("single capacity closed form")
{
    const auto p = defaults();
    const double C = std::numbers::egamma;
    const double hand = (1.0 + 0.5 + 1.0 / 3.0 + 2.0 * (std::log(pi * 1e-4) + C) - C + std::log(p.snr_scale())) / ln2;
    CHECK_THAT(capacity_single_closed(p), WithinAbs(hand, 1e-12));
    CHECK_THAT(capacity_single_closed(p.with_tx_power(2 * p.tx_power())) - capacity_single_closed(p),
               WithinAbs(1.0, 1e-12));

    const auto p1 = p.with_num_antennas(1);
    const double l1 = (2.0 * (std::log(pi * 1e-4) + C) - C + std::log(p.snr_scale())) / ln2;
    CHECK_THAT(capacity_single_closed(p1), WithinAbs(l1, 1e-12));

    for (double alpha : {3.0, 4.0, 5.0}) {
        const auto q = p.with_path_loss_exp(alpha);
        const double d = (capacity_single_closed(q.with_lambda(2e-4)) - capacity_single_closed(q)) / std::log(2.0);
        CAPTURE(alpha);
        CHECK_THAT(d, WithinAbs(alpha / 2.0 / ln2, 1e-9));
    }
}

TEST_CASE("single capacity numeric against closed form")
{
    for (int L : {1, 2, 4, 8}) {
        const auto p = defaults().with_num_antennas(L);
        const auto num = capacity_single_numeric(p);
        const double closed = capacity_single_closed(p);
        CAPTURE(L);
        CHECK(num.err_estimate < 1e-6);
        CHECK(std::abs(num.value - closed) < 0.05);
        // exact log2(1 + g) exceeds log2(g), by a margin that vanishes with rho
        CHECK(num.value > closed);
        const auto loud = p.with_tx_power(100 * p.tx_power());
        CHECK(capacity_single_numeric(loud).value - capacity_single_closed(loud) < num.value - closed);
    }
}

TEST_CASE("conditional single capacity at one antenna")
{
    // L = 1: E log2(1 + m H) = e^{1/m} E1(1/m) / ln 2
    const auto p = defaults().with_num_antennas(1);
    for (double r : {20.0, 60.0, 150.0, 400.0, 700.0}) {
        const double a = std::pow(r, 4.0) / p.snr_scale();
        const double e1 = -std::expint(-a);
        CAPTURE(r);
        CHECK_THAT(conditional_capacity_single(r, p).value, WithinRel(std::exp(a) * e1 / ln2, 1e-8));
    }
    // large a: asymptotic e^a E1(a) ~ (1/a) sum_k (-1)^k k! / a^k
    const double a = std::pow(2000.0, 4.0) / p.snr_scale();
    double series = 0, term = 1.0 / a;
    for (int k = 0; k < 6; ++k) {
        series += term;
        term *= -(k + 1.0) / a;
    }
    CHECK_THAT(conditional_capacity_single(2000.0, p).value, WithinRel(series / ln2, 1e-9));
    CHECK_THROWS_AS(conditional_capacity_single(0.0, p), ParamError);
}

TEST_CASE("two-nearest mean-fading outage")
{
    const auto p = defaults();
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    CHECK(outage_two(0.0, p, OutageTwoMode::MeanFadingSingle).value == 0.0);
    CHECK(outage_two(0.0, p, OutageTwoMode::ExactDouble).value == 0.0);
    for (double f : {0.1, 0.3, 1.0, 3.0, 10.0, 100.0}) {
        CAPTURE(f);
        const double mf = outage_two(f * kl, p, OutageTwoMode::MeanFadingSingle).value;
        CHECK_THAT(mf, WithinAbs(mean_fading_two_oracle(f * kl, p), 1e-8));
        CHECK_THAT(outage_n(f * kl, 2, p).value, WithinAbs(mf, 1e-15));
    }

    // below the lower limit (2 rho L / T)^(1/alpha) the mean-power sum alone
    // exceeds T; just under T = 2 kappa L / x^2 at x -> 0 nothing is in outage
    const double t_small = 2.0 * kl / (60.0 * 60.0);
    CHECK(outage_two(t_small, p, OutageTwoMode::MeanFadingSingle).value < 1e-20);
    CHECK_THAT(outage_two(1e3 * kl, p, OutageTwoMode::MeanFadingSingle).value,
               WithinAbs(mean_fading_two_oracle(1e3 * kl, p), 1e-8));
}

TEST_CASE("two-nearest exact outage against a direct sampler")
{
    const auto p = defaults();
    const double kappa = p.nearest_snr_scale();
    const int L = p.num_antennas();
    PointSampler s{std::mt19937_64(2024)};
    std::gamma_distribution<double> fade(L, 1.0);
    const double ts[] = {0.3 * kappa * L, kappa * L, 3.0 * kappa * L};
    int hits[3] = {0, 0, 0};
    const int n = 400000;
    for (int k = 0; k < n; ++k) {
        const auto x = s.draw(2);
        const double g = kappa * (fade(s.rng) / (x[0] * x[0]) + fade(s.rng) / (x[1] * x[1]));
        for (int j = 0; j < 3; ++j)
            hits[j] += g < ts[j];
    }
    for (int j = 0; j < 3; ++j) {
        const double est = hits[j] / static_cast<double>(n);
        const double se = std::sqrt(est * (1 - est) / n);
        const double exact = outage_two(ts[j], p, OutageTwoMode::ExactDouble).value;
        CAPTURE(j, est, exact);
        CHECK(std::abs(exact - est) < 4 * se);
        // replacing fading by its mean lowers the outage at every threshold here
        CHECK(outage_two(ts[j], p, OutageTwoMode::MeanFadingSingle).value < exact);
    }
}

TEST_CASE("two-nearest snr density")
{
    const auto p = defaults();
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    const auto norm = integrate([&](double s) {
        const double g = kl * std::exp(s);
        return snr_pdf_two(g, p).value * g;
    }, -60.0, 60.0, spec);
    CHECK_THAT(norm.value, WithinAbs(1.0, 1e-4));

    for (double f : {2.1, 3.0, 10.0, 100.0, 1e4}) {
        const double t = f * kl;
        const double h = 1e-4 * t;
        const double fd = (outage_two(t + h, p, OutageTwoMode::MeanFadingSingle).value -
                           outage_two(t - h, p, OutageTwoMode::MeanFadingSingle).value) / (2 * h);
        CAPTURE(f);
        CHECK_THAT(snr_pdf_two(t, p).value, WithinRel(fd, 1e-3));
    }
    CHECK(snr_pdf_two(1e-3 * kl, p).value < 1e-15);
    CHECK(snr_pdf_two(1e-6 * kl, p).value == 0.0);
    CHECK(snr_pdf_two(0.0, p).value == 0.0);
    for (double f = 0.01; f < 1e6; f *= 1.7)
        CHECK(snr_pdf_two(f * kl, p).value >= 0.0);
}

TEST_CASE("two-nearest capacity")
{
    const auto p = defaults();
    const double closed = capacity_two(p, CapacityTwoMode::ClosedAlpha4).value;
    const double C = std::numbers::egamma;
    const double hand =
        (std::log(2 * p.snr_scale() * 4) + pi / 2 - 2 + 2 * C + 2 * std::log(pi * 1e-4)) / ln2;
    CHECK_THAT(closed, WithinAbs(hand, 1e-12));
    CHECK_THAT(capacity_two(p.with_num_antennas(8), CapacityTwoMode::ClosedAlpha4).value - closed,
               WithinAbs(1.0, 1e-12));
    CHECK_THAT(capacity_two(p.with_lambda(4e-4), CapacityTwoMode::ClosedAlpha4).value - closed,
               WithinAbs(4.0, 1e-12));
    CHECK_THAT((capacity_two(p.with_lambda(2e-4), CapacityTwoMode::ClosedAlpha4).value - closed) / std::log(2.0),
               WithinAbs(2.0 / ln2, 1e-9));

    const auto numeric = capacity_two(p, CapacityTwoMode::NumericIntegral);
    CHECK(std::abs(numeric.value - closed) < 0.05);
    CHECK(numeric.err_estimate < 1e-6);
    CHECK_THAT(capacity_n(2, p).value, WithinAbs(numeric.value, 1e-6));

    CHECK_THROWS_AS(capacity_two(p.with_path_loss_exp(3.0), CapacityTwoMode::ClosedAlpha4), UnsupportedError);
    const double a3 = capacity_two(p.with_path_loss_exp(3.0), CapacityTwoMode::NumericIntegral).value;
    CHECK(std::isfinite(a3));
    CHECK(a3 > 0);
}

TEST_CASE("n-nearest outage")
{
    const auto p = defaults();
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    for (int n : {3, 4, 8}) {
        const double s = residual_mean_power(n, p);
        CAPTURE(n);
        CHECK(outage_n(s, n, p).value == 0.0);
        CHECK(outage_n(0.5 * s, n, p).value == 0.0);
        for (double f : {0.5, 2.0, 10.0}) {
            const double t = s + f * kl;
            CHECK_THAT(outage_n(t, n, p).value, WithinAbs(mean_fading_two_oracle(f * kl, p), 1e-8));
        }
    }
    CHECK_THROWS_AS(outage_n(1e4, 4, p.with_path_loss_exp(3.0)), UnsupportedError);
}

TEST_CASE("n-nearest capacity")
{
    const auto p = defaults();
    const double c2 = capacity_two(p, CapacityTwoMode::ClosedAlpha4).value;
    CHECK(std::abs(capacity_n(2, p).value - c2) < 0.05);

    double prev = 0;
    for (int n : {2, 3, 4, 8, 16}) {
        const auto single = capacity_n(n, p, CapacityNMode::SingleIntegral);
        const auto twice = capacity_n(n, p, CapacityNMode::DoubleIntegral);
        CAPTURE(n);
        CHECK_THAT(single.value, WithinAbs(twice.value, 1e-6));
        CHECK(single.value >= prev);
        prev = single.value;
    }

    // E log2(1 + S + kappa L (x1^-2 + x2^-2)) by direct sampling
    PointSampler s{std::mt19937_64(77)};
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    const double res = residual_mean_power(4, p);
    double sum = 0, sq = 0;
    const int n = 1000000;
    for (int k = 0; k < n; ++k) {
        const auto x = s.draw(2);
        const double v = std::log2(1.0 + res + kl * (1 / (x[0] * x[0]) + 1 / (x[1] * x[1])));
        sum += v;
        sq += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sq / n - mean * mean) / n);
    CHECK(std::abs(capacity_n(4, p).value - mean) < 4 * se);
    CHECK_THROWS_AS(capacity_n(4, p.with_path_loss_exp(3.0)), UnsupportedError);
}

TEST_CASE("capacity ordering across association orders")
{
    const auto p = defaults();
    const double c1 = capacity_single_closed(p);
    const double c2 = capacity_two(p, CapacityTwoMode::ClosedAlpha4).value;
    const double c4 = capacity_n(4, p).value;
    const double c8 = capacity_n(8, p).value;
    CHECK(c1 <= c2);
    CHECK(c2 <= c4);
    CHECK(c4 <= c8);
    // the mean-residual approximation overshoots the limit law by Jensen's inequality
    CHECK(c8 > capacity_upper(p, UpperBoundMode::NumericIntegral).value);
}

TEST_CASE("limit snr law")
{
    const auto p = defaults();
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    auto total = [&](LimitPdfVariant v) {
        const double kl = p.nearest_snr_scale() * p.num_antennas();
        return integrate([&](double s) {
            const double g = kl * std::exp(s);
            return snr_pdf_limit(g, p, v) * g;
        }, -60.0, 60.0, spec).value;
    };
    CHECK_THAT(total(LimitPdfVariant::NormalizedLambda2), WithinAbs(1.0, 1e-6));
    CHECK_THAT(total(LimitPdfVariant::PaperLambda4), WithinRel(1.0 / p.lambda(), 1e-4));
    const auto unit = p.with_lambda(1.0);
    CHECK_THAT(snr_cdf_limit(inf, unit, LimitPdfVariant::PaperLambda4),
               WithinRel(snr_cdf_limit(inf, unit, LimitPdfVariant::NormalizedLambda2), 1e-12));

    CHECK(snr_cdf_limit(0.0, p) == 0.0);
    CHECK_THAT(snr_cdf_limit(inf, p), WithinAbs(1.0, 1e-12));
    for (double g = 1e2; g < 1e9; g *= 3.0) {
        CHECK(snr_pdf_limit(g, p) >= 0.0);
        const double h = 1e-4 * g;
        const double fd = (snr_cdf_limit(g + h, p) - snr_cdf_limit(g - h, p)) / (2 * h);
        CHECK_THAT(snr_pdf_limit(g, p), WithinRel(fd, 1e-3));
    }
    CHECK_THROWS_AS(snr_pdf_limit(1.0, p.with_path_loss_exp(3.0)), UnsupportedError);
}

TEST_CASE("limit law against the mean-fading sum over many nearest points")
{
    const auto p = defaults();
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    PointSampler s{std::mt19937_64(9)};
    const int n = 20000;
    std::vector<double> g(n);
    for (auto& v : g) {
        double sum = 0;
        for (double x : s.draw(64))
            sum += 1.0 / (x * x);
        v = kl * sum;
    }
    std::sort(g.begin(), g.end());
    double d = 0;
    for (int i = 0; i < n; ++i) {
        const double c = snr_cdf_limit(g[i], p);
        d = std::max({d, c - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - c});
    }
    CHECK(d < 0.02);
}

TEST_CASE("large-N upper bound")
{
    const auto p = defaults();
    const double closed = capacity_upper(p, UpperBoundMode::ClosedForm).value;
    const auto numeric = capacity_upper(p, UpperBoundMode::NumericIntegral);
    CHECK(std::abs(closed - numeric.value) < 0.1);
    CHECK(numeric.value > closed);

    // E ln g under the limit law is ln c + C + 2 ln 2; direct check via quadrature
    const double lr = p.num_antennas() * p.snr_scale();
    const double c = lr * pi * pi * pi * p.lambda() * p.lambda() / 4.0;
    CHECK_THAT(closed, WithinAbs((std::log(c) + std::numbers::egamma + 2 * std::log(2.0)) / ln2, 1e-9));
    CHECK_THAT(closed - capacity_upper(p, UpperBoundMode::ClosedFormAsPrinted).value, WithinAbs(4.0, 1e-9));

    // c carries lambda^2: doubling lambda adds 2 bps/Hz, quadrupling adds 4
    CHECK_THAT(capacity_upper(p.with_lambda(2e-4), UpperBoundMode::ClosedForm).value - closed, WithinAbs(2.0, 1e-9));
    CHECK_THAT(capacity_upper(p.with_lambda(4e-4), UpperBoundMode::ClosedForm).value - closed, WithinAbs(4.0, 1e-9));
    CHECK_THAT(capacity_upper(p, UpperBoundMode::ClosedForm, LimitPdfVariant::PaperLambda4).value - closed,
               WithinAbs(2.0 * std::log2(p.lambda()), 1e-9));
    CHECK_THROWS_AS(capacity_upper(p.with_path_loss_exp(5.0), UpperBoundMode::ClosedForm), UnsupportedError);
}

TEST_CASE("outage decreases with power, density and antennas")
{
    const auto p = defaults();
    const double t = p.nearest_snr_scale() * p.num_antennas();
    const auto louder = p.with_tx_power(2 * p.tx_power());
    const auto denser = p.with_lambda(2 * p.lambda());
    const auto wider = p.with_num_antennas(8);
    for (const auto* q : {&louder, &denser, &wider}) {
        CHECK(outage_single(t, *q).value <= outage_single(t, p).value);
        CHECK(outage_two(t, *q, OutageTwoMode::MeanFadingSingle).value <=
              outage_two(t, p, OutageTwoMode::MeanFadingSingle).value);
        CHECK(outage_n(t * 3, 4, *q).value <= outage_n(t * 3, 4, p).value);
    }
    CHECK(outage_two(t, louder, OutageTwoMode::ExactDouble).value <= outage_two(t, p, OutageTwoMode::ExactDouble).value);
}

TEST_CASE("closed forms at low snr are returned unclamped")
{
    const auto quiet = defaults().with_tx_power(1e-16);
    const double c = capacity_single_closed(quiet);
    CHECK(c < 0.0);
    CHECK_FALSE(closed_form_reliable(c));
    CHECK(closed_form_reliable(capacity_single_closed(defaults())));
    CHECK(capacity_single_numeric(quiet).value >= 0.0);
}
