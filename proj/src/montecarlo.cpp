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

#include "crancap/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace crancap {

namespace {

constexpr std::size_t kBlockTrials = 4096;
constexpr std::size_t kMaxConsecutiveResamples = 1000000;

// Received powers rho H_i r_i^-alpha for the first `count` RRHs.
void received_powers(const std::vector<double>& distances, const std::vector<double>& gains, std::size_t count,
                     const SystemParams& p, std::vector<double>& out)
{
    out.resize(count);
    const double rho = p.snr_scale();
    if (p.is_alpha4()) {
        for (std::size_t i = 0; i < count; ++i) {
            const double r2 = distances[i] * distances[i];
            out[i] = rho * gains[i] / (r2 * r2);
        }
    } else {
        const double alpha = p.path_loss_exp();
        for (std::size_t i = 0; i < count; ++i)
            out[i] = rho * gains[i] * std::pow(distances[i], -alpha);
    }
}

struct Scratch {
    std::vector<std::size_t> order;
};

// SNR for one strategy from precomputed powers (all RRHs when NBest is involved).
double combine(const AssociationStrategy& s, const std::vector<double>& powers, Scratch& scratch)
{
    const auto n = static_cast<std::size_t>(s.n);
    switch (s.kind) {
    case AssociationStrategy::Kind::SingleNearest: return powers[0];
    case AssociationStrategy::Kind::NNearest: {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sum += powers[i];
        return sum;
    }
    case AssociationStrategy::Kind::NBest: {
        auto& idx = scratch.order;
        idx.resize(powers.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n - 1), idx.end(),
                         [&](std::size_t a, std::size_t b) {
                             return powers[a] > powers[b] || (powers[a] == powers[b] && a < b);
                         });
        // Sum the chosen set in distance order so that selecting exactly the
        // nearest set reproduces the NNearest sum bit for bit.
        std::sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n));
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sum += powers[idx[i]];
        return sum;
    }
    }
    return 0.0;
}

void fill_fading(std::vector<double>& gains, std::size_t count, int L, FadingMode mode, FadingGenerator gen,
                 RandomEngine& rng)
{
    gains.resize(count);
    if (mode == FadingMode::MeanValue) {
        std::fill(gains.begin(), gains.end(), static_cast<double>(L));
        return;
    }
    if (gen == FadingGenerator::DirectGamma) {
        std::gamma_distribution<double> g(static_cast<double>(L), 1.0);
        for (auto& h : gains)
            h = g(rng);
    } else {
        std::normal_distribution<double> n(0.0, std::sqrt(0.5));
        for (auto& h : gains) {
            double s = 0.0;
            for (int l = 0; l < L; ++l) {
                const double re = n(rng), im = n(rng);
                s += re * re + im * im;
            }
            h = s;
        }
    }
}

struct BlockTally {
    std::vector<double> cap_sum, cap_sumsq;
    std::vector<std::vector<std::size_t>> below;  // [strategy][threshold]
    std::vector<std::vector<double>> samples;
    std::size_t resampled = 0;
};

}  // namespace

FadingDraw draw_fading(std::size_t n, int num_antennas, RandomEngine& rng, FadingGenerator generator)
{
    if (num_antennas < 1)
        throw ParamError("draw_fading: num_antennas must be >= 1");
    FadingDraw d;
    fill_fading(d.gains, n, num_antennas, FadingMode::ExactGamma, generator, rng);
    return d;
}

SnrSample snr_sample(const Deployment& deployment, const FadingDraw& fading, const AssociationStrategy& strategy,
                     const SystemParams& params)
{
    const auto need = static_cast<std::size_t>(strategy.rrhs_required());
    if (deployment.n_rrh() < need)
        throw InsufficientRrhsError(strategy.name() + " needs " + std::to_string(need) + " RRHs, deployment has " +
                                    std::to_string(deployment.n_rrh()));
    const std::size_t count = strategy.needs_all_rrhs() ? deployment.n_rrh() : need;
    if (fading.gains.size() < count)
        throw ParamError("snr_sample: fading draw has " + std::to_string(fading.gains.size()) + " gains, need " +
                         std::to_string(count));
    std::vector<double> powers;
    received_powers(deployment.distances, fading.gains, count, params, powers);
    Scratch scratch;
    return SnrSample(combine(strategy, powers, scratch));
}

void TrialConfig::validate() const
{
    if (n_trials < kMinTrials)
        throw ParamError("n_trials must be >= " + std::to_string(kMinTrials) + " for CI validity, got " +
                         std::to_string(n_trials));
    for (double t : threshold_grid)
        if (std::isnan(t) || t < 0.0)
            throw ParamError("threshold_grid entries must be >= 0");
    if (sampler == DeploymentSampler::OrderedGamma && strategy.needs_all_rrhs())
        throw ParamError("OrderedGamma sampler cannot serve NBest strategies (needs every RRH)");
}

double RunMetadata::resample_fraction() const noexcept
{
    const double total = static_cast<double>(trials + resampled_draws);
    return total > 0.0 ? static_cast<double>(resampled_draws) / total : 0.0;
}

SimulationResult simulate(const SystemParams& params, const std::vector<AssociationStrategy>& strategies,
                          const TrialConfig& config, bool keep_samples)
{
    config.validate();
    if (strategies.empty())
        throw ParamError("simulate: no strategies given");

    std::size_t required = 1;
    bool need_all = false;
    for (const auto& s : strategies) {
        required = std::max(required, static_cast<std::size_t>(s.rrhs_required()));
        need_all = need_all || s.needs_all_rrhs();
    }
    if (need_all && config.sampler == DeploymentSampler::OrderedGamma)
        throw ParamError("OrderedGamma sampler cannot serve NBest strategies (needs every RRH)");

    const std::size_t n_strat = strategies.size();
    const std::size_t n_thr = config.threshold_grid.size();
    const std::size_t n_blocks = (config.n_trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<BlockTally> blocks(n_blocks);

    auto run_block = [&](std::size_t b) {
        RandomEngine rng = make_stream(config.seed, b);
        const std::size_t begin = b * kBlockTrials;
        const std::size_t count = std::min(kBlockTrials, config.n_trials - begin);
        BlockTally& t = blocks[b];
        t.cap_sum.assign(n_strat, 0.0);
        t.cap_sumsq.assign(n_strat, 0.0);
        t.below.assign(n_strat, std::vector<std::size_t>(n_thr, 0));
        t.samples.assign(n_strat, {});
        if (keep_samples)
            for (auto& v : t.samples)
                v.reserve(count);

        Deployment dep;
        std::vector<double> gains, powers;
        Scratch scratch;
        const double R = params.disc_radius();
        for (std::size_t trial = 0; trial < count; ++trial) {
            std::size_t attempts = 0;
            while (true) {
                if (config.sampler == DeploymentSampler::UniformDisc) {
                    sample_deployment_into(params, rng, dep);
                    if (dep.n_rrh() >= required)
                        break;
                } else {
                    dep.distances = sample_ordered_distances(params.lambda(), required, rng);
                    if (dep.distances.back() <= R)
                        break;
                }
                ++t.resampled;
                if (++attempts > kMaxConsecutiveResamples)
                    throw InsufficientRrhsError("deployments keep holding fewer than " + std::to_string(required) +
                                                " RRHs; mean RRH count is " + std::to_string(params.mean_rrh_count()));
            }
            const std::size_t k = need_all ? dep.n_rrh() : required;
            fill_fading(gains, k, params.num_antennas(), config.fading_mode, config.fading_generator, rng);
            received_powers(dep.distances, gains, k, params, powers);
            for (std::size_t s = 0; s < n_strat; ++s) {
                const double snr = combine(strategies[s], powers, scratch);
                const double cap = std::log2(1.0 + snr);
                t.cap_sum[s] += cap;
                t.cap_sumsq[s] += cap * cap;
                for (std::size_t j = 0; j < n_thr; ++j)
                    if (snr < config.threshold_grid[j])
                        ++t.below[s][j];
                if (keep_samples)
                    t.samples[s].push_back(snr);
            }
        }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_blocks));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                while (!failed.load()) {
                    const std::size_t b = next.fetch_add(1);
                    if (b >= n_blocks)
                        return;
                    try {
                        run_block(b);
                    } catch (...) {
                        if (!failed.exchange(true))
                            failure = std::current_exception();
                        return;
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    SimulationResult out;
    out.thresholds = config.threshold_grid;
    out.meta.trials = config.n_trials;
    out.meta.threads = threads;
    out.meta.rng_algorithm = std::string(kRngAlgorithm);
    out.tallies.resize(n_strat);
    for (std::size_t s = 0; s < n_strat; ++s) {
        double sum = 0.0, sumsq = 0.0;
        std::vector<std::size_t> below(n_thr, 0);
        auto& tally = out.tallies[s];
        tally.strategy = strategies[s];
        for (const auto& b : blocks) {
            sum += b.cap_sum[s];
            sumsq += b.cap_sumsq[s];
            for (std::size_t j = 0; j < n_thr; ++j)
                below[j] += b.below[s][j];
            if (keep_samples)
                tally.snr_samples.insert(tally.snr_samples.end(), b.samples[s].begin(), b.samples[s].end());
        }
        tally.capacity = EstimateWithCI::from_sums(sum, sumsq, config.n_trials);
        for (std::size_t j = 0; j < n_thr; ++j)
            tally.outage.push_back(EstimateWithCI::from_proportion(below[j], config.n_trials));
    }
    for (const auto& b : blocks)
        out.meta.resampled_draws += b.resampled;
    return out;
}

EstimateWithCI estimate_outage(const TrialConfig& config, double threshold, const SystemParams& params)
{
    TrialConfig c = config;
    c.threshold_grid = {threshold};
    return simulate(params, {config.strategy}, c).tallies.front().outage.front();
}

std::vector<EstimateWithCI> estimate_outage_curve(const TrialConfig& config, const SystemParams& params)
{
    return simulate(params, {config.strategy}, config).tallies.front().outage;
}

EstimateWithCI estimate_capacity(const TrialConfig& config, const SystemParams& params)
{
    TrialConfig c = config;
    c.threshold_grid.clear();
    return simulate(params, {config.strategy}, c).tallies.front().capacity;
}

std::vector<double> sample_snr(const TrialConfig& config, const SystemParams& params)
{
    TrialConfig c = config;
    c.threshold_grid.clear();
    return std::move(simulate(params, {config.strategy}, c, true).tallies.front().snr_samples);
}

StrategyComparison compare_strategies(const SystemParams& params, const std::vector<int>& n_list,
                                      std::size_t trials, std::uint64_t seed)
{
    if (n_list.empty())
        throw ParamError("compare_strategies: n_list is empty");
    std::vector<AssociationStrategy> strategies;
    for (int n : n_list) {
        strategies.push_back(AssociationStrategy::nearest(n));
        strategies.push_back(AssociationStrategy::best(n));
    }
    TrialConfig config;
    config.n_trials = trials;
    config.seed = seed;
    const auto sim = simulate(params, strategies, config, true);

    StrategyComparison out;
    out.meta = sim.meta;
    for (const auto& t : sim.tallies)
        out.rows.push_back({t.strategy, t.capacity});
    for (std::size_t s = 0; s + 1 < sim.tallies.size(); s += 2) {
        const auto& nearest = sim.tallies[s].snr_samples;
        const auto& best = sim.tallies[s + 1].snr_samples;
        for (std::size_t i = 0; i < nearest.size(); ++i)
            if (best[i] < nearest[i])
                ++out.dominance_violations;
    }
    return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf)
{
    if (samples.empty())
        throw ParamError("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double ks_critical_value(std::size_t n, double significance)
{
    if (n == 0 || !(significance > 0.0 && significance < 1.0))
        throw ParamError("ks_critical_value: need n > 0 and significance in (0, 1)");
    const double c = std::sqrt(-0.5 * std::log(significance / 2.0));
    const double rn = std::sqrt(static_cast<double>(n));
    return c / (rn + 0.12 + 0.11 / rn);
}

}  // namespace crancap
