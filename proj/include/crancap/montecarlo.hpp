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

#ifndef CRANCAP_MONTECARLO_HPP
#define CRANCAP_MONTECARLO_HPP

#include "crancap/geometry.hpp"
#include "crancap/params.hpp"
#include "crancap/random.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crancap {

enum class FadingMode {
    ExactGamma,  ///< H_i ~ Gamma(L, 1)
    MeanValue,   ///< H_i = L
};

enum class FadingGenerator {
    DirectGamma,         ///< std::gamma_distribution(L, 1)
    ComplexGaussianSum,  ///< sum of L |CN(0,1)|^2
};

enum class DeploymentSampler {
    UniformDisc,   ///< Poisson count, uniform points, full sort
    OrderedGamma,  ///< the n nearest only, via cumulative Exp(1) sums; no NBest
};

struct FadingDraw {
    std::vector<double> gains;  // one per RRH, in deployment order
};

FadingDraw draw_fading(std::size_t n, int num_antennas, RandomEngine& rng,
                       FadingGenerator generator = FadingGenerator::DirectGamma);

class InsufficientRrhsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Received SNR of one realization under @p strategy. Throws
/// InsufficientRrhsError when the deployment has fewer than n RRHs, and
/// ParamError when @p fading has fewer gains than the strategy reads.
SnrSample snr_sample(const Deployment& deployment, const FadingDraw& fading, const AssociationStrategy& strategy,
                     const SystemParams& params);

struct TrialConfig {
    static constexpr std::size_t kMinTrials = 1000;

    std::size_t n_trials = 100000;
    std::uint64_t seed = 1;
    AssociationStrategy strategy = AssociationStrategy::single_nearest();
    std::vector<double> threshold_grid;
    FadingMode fading_mode = FadingMode::ExactGamma;
    FadingGenerator fading_generator = FadingGenerator::DirectGamma;
    DeploymentSampler sampler = DeploymentSampler::UniformDisc;
    unsigned threads = 0;  // 0 = hardware concurrency; never changes results

    void validate() const;
};

struct RunMetadata {
    std::size_t trials = 0;
    /// Draws discarded because the deployment had fewer RRHs than required.
    std::size_t resampled_draws = 0;
    unsigned threads = 0;
    std::string rng_algorithm;

    double resample_fraction() const noexcept;
};

struct StrategyTally {
    AssociationStrategy strategy;
    EstimateWithCI capacity;             // log2(1 + SNR), bps/Hz
    std::vector<EstimateWithCI> outage;  // one per threshold
    std::vector<double> snr_samples;     // trial order; filled only on request
};

struct SimulationResult {
    std::vector<double> thresholds;
    std::vector<StrategyTally> tallies;
    RunMetadata meta;
};

/// Runs config.n_trials realizations and evaluates every strategy on each one
/// (common random numbers). config.strategy is ignored here. Trials are split
/// into fixed blocks, each with its own substream, and merged in block order,
/// so output is bit-identical for any thread count.
SimulationResult simulate(const SystemParams& params, const std::vector<AssociationStrategy>& strategies,
                          const TrialConfig& config, bool keep_samples = false);

EstimateWithCI estimate_outage(const TrialConfig& config, double threshold, const SystemParams& params);
/// One estimate per entry of config.threshold_grid, from a single run.
std::vector<EstimateWithCI> estimate_outage_curve(const TrialConfig& config, const SystemParams& params);
EstimateWithCI estimate_capacity(const TrialConfig& config, const SystemParams& params);
std::vector<double> sample_snr(const TrialConfig& config, const SystemParams& params);

struct StrategyComparison {
    struct Row {
        AssociationStrategy strategy;
        EstimateWithCI capacity;
    };
    std::vector<Row> rows;  // NNearest(n), NBest(n) for each n, in n_list order
    /// Realizations where NBest(n) fell below NNearest(n); zero by construction.
    std::size_t dominance_violations = 0;
    RunMetadata meta;
};

StrategyComparison compare_strategies(const SystemParams& params, const std::vector<int>& n_list,
                                      std::size_t trials, std::uint64_t seed = 1);

/// Kolmogorov-Smirnov distance between samples and a continuous cdf.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
/// Asymptotic one-sample KS critical value (Stephens' small-n correction).
double ks_critical_value(std::size_t n, double significance);

}  // namespace crancap

#endif  // CRANCAP_MONTECARLO_HPP
