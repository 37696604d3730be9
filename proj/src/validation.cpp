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

#include "crancap/validation.hpp"

#include "crancap/analytic.hpp"
#include "crancap/geometry.hpp"
#include "crancap/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace crancap {

namespace {

std::string fmt(const char* pattern, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

CheckResult gap_check(std::string name, double a, double b, double tol, std::string detail = {})
{
    const double gap = std::abs(a - b);
    if (detail.empty())
        detail = fmt("%.6f vs %.6f", a, b);
    return {std::move(name), gap, tol, gap <= tol, false, std::move(detail)};
}

CheckResult se_check(std::string name, double analytic, const EstimateWithCI& mc)
{
    const double gap = std::abs(analytic - mc.mean);
    const double tol = 3.0 * mc.std_error;
    return {std::move(name), gap, tol, gap <= tol, false,
            fmt("analytic %.6f, mc %.6f +- %.2g", analytic, mc.mean, mc.std_error)};
}

CheckResult info(std::string name, double measured, std::string detail)
{
    return {std::move(name), measured, 0, true, true, std::move(detail)};
}

}  // namespace

bool ValidationReport::all_passed() const noexcept
{
    return failed_count() == 0;
}

std::size_t ValidationReport::failed_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.informational && !c.passed; }));
}

void ValidationReport::print(std::ostream& out) const
{
    for (const auto& c : checks) {
        const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
        char line[512];
        if (c.informational)
            std::snprintf(line, sizeof line, "%-4s %-48s measured %.4g  %s", tag, c.name.c_str(), c.measured,
                          c.detail.c_str());
        else
            std::snprintf(line, sizeof line, "%-4s %-48s measured %.4g tol %.4g  %s", tag, c.name.c_str(),
                          c.measured, c.tolerance, c.detail.c_str());
        out << line << '\n';
    }
    out << (all_passed() ? "validation passed" : "validation FAILED") << " (" << failed_count() << " failing, "
        << trials << " trials, seed " << seed << ")\n";
}

std::vector<double> validation_thresholds(const SystemParams& params)
{
    const double base = params.nearest_snr_scale() * params.num_antennas();
    return {0.1 * base, 0.3 * base, base, 3.0 * base, 10.0 * base};
}

ValidationReport validate_run(const SystemParams& params, std::size_t trials, std::uint64_t seed,
                              const ValidationHooks& hooks)
{
    ValidationReport report;
    report.trials = trials;
    report.seed = seed;
    auto& out = report.checks;
    const bool a4 = params.is_alpha4();
    const auto thresholds = validation_thresholds(params);

    // Analytic self-consistency.
    const double c1_closed = capacity_single_closed(params) + hooks.single_closed_offset;
    const double c1_numeric = capacity_single_numeric(params).value;
    out.push_back(gap_check("capacity single: closed vs numeric", c1_closed, c1_numeric, 0.05));
    if (a4) {
        const double c2_closed = capacity_two(params, CapacityTwoMode::ClosedAlpha4).value;
        const double c2_numeric = capacity_two(params, CapacityTwoMode::NumericIntegral).value;
        out.push_back(gap_check("capacity two: closed vs numeric", c2_closed, c2_numeric, 0.05));
        out.push_back(gap_check("capacity_n(2) vs two-nearest closed", capacity_n(2, params).value, c2_closed, 0.05));
        const double n8s = capacity_n(8, params, CapacityNMode::SingleIntegral).value;
        const double n8d = capacity_n(8, params, CapacityNMode::DoubleIntegral).value;
        out.push_back(gap_check("capacity_n(8): single vs double integral", n8s, n8d, 1e-6));
        const double up_closed = capacity_upper(params, UpperBoundMode::ClosedForm).value;
        const double up_numeric = capacity_upper(params, UpperBoundMode::NumericIntegral).value;
        out.push_back(gap_check("upper bound: closed vs numeric", up_closed, up_numeric, 0.1));
    }

    // Distribution laws.
    {
        const double kappa = params.nearest_snr_scale() * params.num_antennas();
        const double tail = snr_cdf_limit(1e12 * kappa, params);
        out.push_back(gap_check("limit law mass (normalized)", tail, 1.0, 1e-4, fmt("cdf(1e12 kappa L) = %.8f", tail)));
    }

    // Monte Carlo, exact fading, common random numbers.
    TrialConfig cfg;
    cfg.n_trials = trials;
    cfg.seed = seed;
    cfg.threshold_grid = thresholds;
    std::vector<AssociationStrategy> strategies{AssociationStrategy::single_nearest(), AssociationStrategy::nearest(2),
                                                AssociationStrategy::nearest(4)};
    const SimulationResult sim = simulate(params, strategies, cfg);
    const auto& single = sim.tallies[0];
    const auto& two = sim.tallies[1];
    const auto& four = sim.tallies[2];

    for (std::size_t k = 0; k < thresholds.size(); ++k)
        out.push_back(se_check("outage single vs mc, T=" + fmt("%.3g", thresholds[k]),
                               outage_single(thresholds[k], params).value, single.outage[k]));
    out.push_back(gap_check("capacity single: numeric vs mc", c1_numeric, single.capacity.mean, 0.1));

    if (a4) {
        double worst = 0;
        for (std::size_t k = 0; k < thresholds.size(); ++k) {
            const double exact = outage_two(thresholds[k], params, OutageTwoMode::ExactDouble).value;
            out.push_back(se_check("outage two (exact) vs mc, T=" + fmt("%.3g", thresholds[k]), exact, two.outage[k]));
            const double approx = outage_two(thresholds[k], params, OutageTwoMode::MeanFadingSingle).value;
            worst = std::max(worst, std::abs(approx - exact));
        }
        out.push_back(info("outage two: mean-fading approximation gap", worst, "max |approx - exact| over T grid"));

        double worst_n = 0;
        for (std::size_t k = 0; k < thresholds.size(); ++k)
            worst_n = std::max(worst_n, std::abs(outage_n(thresholds[k], 4, params).value - four.outage[k].mean));
        out.push_back(info("outage_n(4) vs mc: approximation gap", worst_n, "max |approx - mc| over T grid"));

        const double c2_closed = capacity_two(params, CapacityTwoMode::ClosedAlpha4).value;
        out.push_back(info("capacity two closed vs mc: approximation gap", c2_closed - two.capacity.mean,
                           fmt("closed %.4f, mc %.4f", c2_closed, two.capacity.mean)));
        const double c4 = capacity_n(4, params).value;
        out.push_back(info("capacity_n(4) vs mc: approximation gap", c4 - four.capacity.mean,
                           fmt("analytic %.4f, mc %.4f", c4, four.capacity.mean)));
    }

    // Mean-fading limit law against its own Monte Carlo model.
    if (a4) {
        TrialConfig mean_cfg;
        mean_cfg.n_trials = std::min<std::size_t>(trials, 20000);
        mean_cfg.seed = seed + 1;
        mean_cfg.fading_mode = FadingMode::MeanValue;
        mean_cfg.strategy = AssociationStrategy::nearest(64);
        mean_cfg.sampler = DeploymentSampler::OrderedGamma;
        const auto samples = sample_snr(mean_cfg, params);
        const double d = ks_statistic(samples, [&](double g) { return snr_cdf_limit(g, params); });
        const double crit = ks_critical_value(samples.size(), 0.01);
        out.push_back(info("limit law vs mc nearest:64 (mean fading), KS", d,
                           fmt("critical %.4f at 1%%; 64 terms truncate the sum", crit)));
        const double up = capacity_upper(params, UpperBoundMode::NumericIntegral).value;
        mean_cfg.n_trials = trials;
        mean_cfg.fading_mode = FadingMode::ExactGamma;
        mean_cfg.sampler = DeploymentSampler::UniformDisc;
        const auto c64 = estimate_capacity(mean_cfg, params);
        out.push_back({"upper bound >= mc nearest:64", std::max(0.0, c64.mean - up), 3.0 * c64.std_error,
                       c64.mean - up <= 3.0 * c64.std_error, false, fmt("bound %.4f, mc %.4f", up, c64.mean)});
    }

    // Strategy dominance with common random numbers.
    const auto cmp = compare_strategies(params, {2, 4}, std::min<std::size_t>(trials, 20000), seed + 2);
    out.push_back({"best:n >= nearest:n per realization", static_cast<double>(cmp.dominance_violations), 0,
                   cmp.dominance_violations == 0, false, "violations over n in {2,4}"});
    bool means_ok = true;
    for (std::size_t i = 0; i + 1 < cmp.rows.size(); i += 2)
        means_ok = means_ok && cmp.rows[i + 1].capacity.mean >= cmp.rows[i].capacity.mean;
    out.push_back({"best:n >= nearest:n in mean", means_ok ? 0.0 : 1.0, 0, means_ok, false, "n in {2,4}"});

    bool monotone = single.capacity.mean <= two.capacity.mean && two.capacity.mean <= four.capacity.mean;
    out.push_back({"mc capacity nondecreasing in n", monotone ? 0.0 : 1.0, 0, monotone, false,
                   fmt("%.4f <= %.4f <= %.4f", single.capacity.mean, two.capacity.mean, four.capacity.mean)});
    return report;
}

}  // namespace crancap
