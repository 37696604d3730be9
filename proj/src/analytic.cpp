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

#include "crancap/analytic.hpp"

#include "crancap/geometry.hpp"
#include "crancap/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace crancap {

namespace {

using std::numbers::ln2;
using std::numbers::pi;

constexpr double kInf = std::numeric_limits<double>::infinity();
// exp(-x) underflows past this
constexpr double kExpCutoff = 745.0;

QuadratureSpec outer_spec()
{
    QuadratureSpec s;
    s.rel_tol = 1e-9;
    s.abs_tol = 1e-13;
    return s;
}

QuadratureSpec inner_spec()
{
    QuadratureSpec s;
    s.rel_tol = 1e-11;
    s.abs_tol = 1e-15;
    return s;
}

// Log-domain integration of a positive-support integrand g(z), z = z0 e^s.
QuadratureResult integrate_log_scale(const Integrand& g, double z0, const QuadratureSpec& base)
{
    QuadratureSpec spec = base;
    spec.scale = 2.0;
    return integrate([&](double s) {
        const double z = z0 * std::exp(s);
        if (z == 0.0 || !std::isfinite(z))
            return 0.0;
        return z * g(z);
    }, {-kInf, 0.0, kInf}, spec);
}

// int_{x_lo}^inf g(x) dx with x = x_lo e^w. The feature near x_lo has width
// ~x_lo while exp(-x) cuts off near x = 1; the log map resolves both.
QuadratureResult integrate_above(const Integrand& g, double x_lo, const QuadratureSpec& base)
{
    QuadratureSpec spec = base;
    spec.scale = 1.0 / (1.0 + x_lo);
    std::vector<double> points{0.0, kInf};
    if (x_lo < 1.0)
        points = {0.0, std::log(1.0 / x_lo), kInf};
    return integrate([&](double w) {
        const double x = x_lo * std::exp(w);
        if (!std::isfinite(x))
            return 0.0;
        return g(x) * x;
    }, points, spec);
}

std::vector<double> with_breakpoint(double a, double x, double b)
{
    if (std::isfinite(x) && x > a && x < b && x < kExpCutoff)
        return {a, x, b};
    return {a, b};
}

void require_threshold(double t)
{
    if (std::isnan(t) || t < 0.0)
        throw ParamError("SNR threshold must be >= 0, got " + std::to_string(t));
}

double gamma_pdf(int shape, double h)
{
    if (h <= 0.0)
        return (shape == 1 && h == 0.0) ? 1.0 : 0.0;
    return std::exp((shape - 1) * std::log(h) - h - std::lgamma(shape));
}

// E[log2(1 + m H)], H ~ Gamma(L, 1).
QuadratureResult fading_log_capacity(double m, int L)
{
    QuadratureSpec spec = inner_spec();
    spec.scale = static_cast<double>(L);
    return integrate([&](double h) { return gamma_pdf(L, h) * std::log2(1.0 + m * h); },
                     {0.0, static_cast<double>(L), kInf}, spec);
}

// P[a H1 + b H2 < t], H1, H2 iid Gamma(L, 1).
double two_fading_cdf(double a, double b, double t, int L)
{
    const double hmax = t / a;
    if (hmax <= 0.0)
        return 0.0;
    QuadratureSpec spec = inner_spec();
    spec.rel_tol = 1e-10;
    return integrate([&](double h) {
        const double rest = t - a * h;
        return rest <= 0.0 ? 0.0 : gamma_pdf(L, h) * regularized_lower_gamma(L, rest / b);
    }, 0.0, hmax, spec).value;
}

// Mean-fading two-nearest outage at threshold u:
// int_{x_lo}^inf [x2 - x1_lo(x2)] e^-x2 dx2 with kappa L (x1^-h + x2^-h) < u.
Evaluation mean_fading_two_outage(double u, const SystemParams& p)
{
    if (u <= 0.0)
        return {0.0, 0.0};
    if (std::isinf(u))
        return {1.0, 0.0};
    const double h = p.path_loss_exp() / 2.0;
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    const double x_lo = std::pow(2.0 * kl / u, 1.0 / h);
    if (x_lo > kExpCutoff)
        return {0.0, 0.0};
    const double ratio = u / kl;
    const auto r = integrate_above([&](double x2) {
        const double slack = ratio - std::pow(x2, -h);
        if (slack <= 0.0)
            return 0.0;
        const double x1_lo = std::pow(slack, -1.0 / h);
        return std::max(0.0, x2 - x1_lo) * std::exp(-x2);
    }, x_lo, outer_spec());
    return {r.value, r.err_estimate};
}

}  // namespace

bool closed_form_reliable(double capacity_bps_hz) noexcept
{
    return capacity_bps_hz > kClosedFormMinCapacity;
}

Evaluation outage_single(double threshold, const SystemParams& p)
{
    require_threshold(threshold);
    if (threshold == 0.0)
        return {0.0, 0.0};
    if (std::isinf(threshold))
        return {1.0, 0.0};
    const double h = p.path_loss_exp() / 2.0;
    const double kappa = p.nearest_snr_scale();
    const int L = p.num_antennas();
    const double scaled = threshold / kappa;
    const double x_star = std::pow(kappa * L / threshold, 1.0 / h);
    const auto r = integrate([&](double x) {
        return regularized_lower_gamma(L, std::pow(x, h) * scaled) * std::exp(-x);
    }, with_breakpoint(0.0, x_star, kInf), outer_spec());
    return {r.value, r.err_estimate};
}

Evaluation snr_pdf_single(double gamma, const SystemParams& p)
{
    if (!(gamma > 0.0) || std::isinf(gamma))
        return {0.0, 0.0};
    const double h = p.path_loss_exp() / 2.0;
    const double kappa = p.nearest_snr_scale();
    const int L = p.num_antennas();
    // Integrate gamma * pdf, which is O(1), then rescale.
    const double log_norm = -std::lgamma(L) + L * std::log(gamma);
    const double x_star = std::pow(kappa * L / gamma, 1.0 / h);
    const auto r = integrate([&](double x) {
        if (x <= 0.0)
            return 0.0;
        const double a = std::pow(x, h) / kappa;
        return std::exp(L * std::log(a) + log_norm - a * gamma - x);
    }, with_breakpoint(0.0, x_star, kInf), outer_spec());
    return {r.value / gamma, r.err_estimate / gamma};
}

double capacity_single_closed(const SystemParams& p)
{
    const double C = euler_gamma();
    const double alpha = p.path_loss_exp();
    return (harmonic_number(p.num_antennas() - 1) + alpha / 2.0 * (std::log(pi * p.lambda()) + C) - C +
            std::log(p.snr_scale())) / ln2;
}

Evaluation conditional_capacity_single(double r, const SystemParams& p)
{
    if (!(r > 0.0))
        throw ParamError("conditional_capacity_single: distance must be positive");
    const double m = p.snr_scale() * std::pow(r, -p.path_loss_exp());
    const auto q = fading_log_capacity(m, p.num_antennas());
    return {q.value, q.err_estimate};
}

Evaluation capacity_single_numeric(const SystemParams& p)
{
    const double h = p.path_loss_exp() / 2.0;
    const double kappa = p.nearest_snr_scale();
    const int L = p.num_antennas();
    const auto r = integrate([&](double x) {
        if (x <= 0.0)
            return 0.0;
        return std::exp(-x) * fading_log_capacity(kappa * std::pow(x, -h), L).value;
    }, with_breakpoint(0.0, std::pow(kappa * L, 1.0 / h), kInf), outer_spec());
    return {r.value, r.err_estimate};
}

Evaluation outage_two(double threshold, const SystemParams& p, OutageTwoMode mode)
{
    require_threshold(threshold);
    if (mode == OutageTwoMode::MeanFadingSingle)
        return mean_fading_two_outage(threshold, p);

    if (threshold == 0.0)
        return {0.0, 0.0};
    if (std::isinf(threshold))
        return {1.0, 0.0};
    const double h = p.path_loss_exp() / 2.0;
    const double kappa = p.nearest_snr_scale();
    const int L = p.num_antennas();
    const double x_star = std::pow(kappa * L / threshold, 1.0 / h);

    QuadratureSpec middle = outer_spec();
    middle.rel_tol = 1e-10;
    middle.abs_tol = 1e-14;
    const auto r = integrate([&](double x2) {
        if (x2 <= 0.0)
            return 0.0;
        const double b = kappa * std::pow(x2, -h);
        const auto inner = integrate([&](double x1) {
            if (x1 <= 0.0)
                return 0.0;
            return two_fading_cdf(kappa * std::pow(x1, -h), b, threshold, L);
        }, with_breakpoint(0.0, x_star, x2), middle);
        return inner.value * std::exp(-x2);
    }, with_breakpoint(0.0, x_star, kInf), outer_spec());
    return {r.value, r.err_estimate};
}

Evaluation snr_pdf_two(double gamma, const SystemParams& p)
{
    if (!(gamma > 0.0) || std::isinf(gamma))
        return {0.0, 0.0};
    const double alpha = p.path_loss_exp();
    const double h = alpha / 2.0;
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    const double x_lo = std::pow(2.0 * kl / gamma, 1.0 / h);
    if (x_lo > kExpCutoff)
        return {0.0, 0.0};
    // pdf = pref gamma^expo * int (1 - kappa L x^-h / gamma)^expo e^-x dx; the
    // integral is O(1), so tolerances stay relative for any gamma.
    const double expo = -2.0 / alpha - 1.0;
    const double scale = (2.0 / alpha) * std::pow(kl, 2.0 / alpha) * std::pow(gamma, expo);
    const double ratio = kl / gamma;
    const auto r = integrate_above([&](double x) {
        const double base = 1.0 - ratio * std::pow(x, -h);
        if (base <= 0.0)
            return 0.0;
        return std::pow(base, expo) * std::exp(-x);
    }, x_lo, inner_spec());
    return {scale * r.value, scale * r.err_estimate};
}

Evaluation capacity_two(const SystemParams& p, CapacityTwoMode mode)
{
    if (mode == CapacityTwoMode::ClosedAlpha4) {
        require_alpha4(p, "capacity_two(ClosedAlpha4)");
        const double C = euler_gamma();
        const double L = p.num_antennas();
        const double v =
            (std::log(2.0 * p.snr_scale() * L) + pi / 2.0 - 2.0 + 2.0 * C + 2.0 * std::log(pi * p.lambda())) / ln2;
        return {v, 0.0};
    }
    const double kl = p.nearest_snr_scale() * p.num_antennas();
    const auto r = integrate_log_scale([&](double z) {
        return snr_pdf_two(z, p).value * std::log2(1.0 + z);
    }, kl, outer_spec());
    return {r.value, r.err_estimate};
}

Evaluation outage_n(double threshold, int n, const SystemParams& p)
{
    require_alpha4(p, "outage_n");
    require_threshold(threshold);
    const double s = residual_mean_power(n, p);
    if (threshold <= s)
        return {0.0, 0.0};
    return mean_fading_two_outage(threshold - s, p);
}

Evaluation capacity_n(int n, const SystemParams& p, CapacityNMode mode)
{
    require_alpha4(p, "capacity_n");
    const double s = residual_mean_power(n, p);
    const double kl = p.nearest_snr_scale() * p.num_antennas();

    if (mode == CapacityNMode::DoubleIntegral) {
        const auto r = integrate_log_scale([&](double z) {
            return snr_pdf_two(z, p).value * std::log2(1.0 + s + z);
        }, kl, outer_spec());
        return {r.value, r.err_estimate};
    }

    // Swapping the order of integration, for fixed x2 = x with c = kappa L / x^2:
    //   int_{2c}^inf (z - c)^-3/2 ln(1 + S + z) dz
    //     = 2 c^-1/2 ln(1 + S + 2c) + 4 K^-1/2 arctan(sqrt(K / c)),  K = 1 + S + c.
    // Written with q = x^2 (1 + S) so that nothing overflows as x -> 0.
    const auto r = integrate([&](double x) {
        if (x <= 0.0)
            return 0.0;
        const double q = x * x * (1.0 + s);
        const double log_term = x * (std::log(q + 2.0 * kl) - 2.0 * std::log(x));
        const double atan_term = 2.0 * x * std::sqrt(kl / (q + kl)) * std::atan(std::sqrt((q + kl) / kl));
        return std::exp(-x) * (log_term + atan_term);
    }, 0.0, kInf, outer_spec());
    return {r.value / ln2, r.err_estimate / ln2};
}

namespace {

struct LimitLaw {
    double prefactor;  // pi lambda sqrt(L rho) / 2
    double c;          // L rho pi^3 lambda^k / 4
};

LimitLaw limit_law(const SystemParams& p, LimitPdfVariant variant)
{
    require_alpha4(p, "limit SNR law");
    const double k = (variant == LimitPdfVariant::PaperLambda4) ? 4.0 : 2.0;
    const double lr = p.num_antennas() * p.snr_scale();
    return {pi * p.lambda() * std::sqrt(lr) / 2.0, lr * pi * pi * pi * std::pow(p.lambda(), k) / 4.0};
}

}  // namespace

double snr_pdf_limit(double gamma, const SystemParams& p, LimitPdfVariant variant)
{
    const auto law = limit_law(p, variant);
    if (!(gamma > 0.0) || std::isinf(gamma))
        return 0.0;
    return std::exp(std::log(law.prefactor) - 1.5 * std::log(gamma) - law.c / gamma);
}

double snr_cdf_limit(double gamma, const SystemParams& p, LimitPdfVariant variant)
{
    const auto law = limit_law(p, variant);
    const double mass = law.prefactor * std::sqrt(pi / law.c);
    if (!(gamma > 0.0))
        return 0.0;
    if (std::isinf(gamma))
        return mass;
    return mass * std::erfc(std::sqrt(law.c / gamma));
}

Evaluation capacity_upper(const SystemParams& p, UpperBoundMode mode, LimitPdfVariant variant)
{
    const auto law = limit_law(p, variant);
    const double C = euler_gamma();
    switch (mode) {
    case UpperBoundMode::ClosedForm:
        return {(C + capacity_series().value + std::log(law.c)) / ln2, 0.0};
    case UpperBoundMode::ClosedFormAsPrinted:
        return {(C - capacity_series().value + std::log(law.c)) / ln2, 0.0};
    case UpperBoundMode::NumericIntegral: break;
    }
    const auto r = integrate_log_scale([&](double g) {
        return snr_pdf_limit(g, p, variant) * std::log2(1.0 + g);
    }, law.c, outer_spec());
    return {r.value, r.err_estimate};
}

}  // namespace crancap
