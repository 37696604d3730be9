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

#include "crancap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace crancap {

using std::numbers::pi;

void sample_deployment_into(const SystemParams& params, RandomEngine& rng, Deployment& out)
{
    std::poisson_distribution<long> count(params.mean_rrh_count());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const long n = count(rng);
    out.distances.resize(static_cast<std::size_t>(n));
    const double R = params.disc_radius();
    for (auto& r : out.distances) {
        // 1 - U lies in (0, 1], keeping r > 0
        r = R * std::sqrt(1.0 - unit(rng));
    }
    std::sort(out.distances.begin(), out.distances.end());
}

Deployment sample_deployment(const SystemParams& params, RandomEngine& rng)
{
    Deployment d;
    sample_deployment_into(params, rng, d);
    return d;
}

std::vector<double> sample_ordered_distances(double lambda, std::size_t n, RandomEngine& rng)
{
    if (!(lambda > 0.0))
        throw ParamError("sample_ordered_distances: lambda must be positive");
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> r(n);
    double g = 0.0;
    for (auto& ri : r) {
        g += exp1(rng);
        ri = std::sqrt(g / (pi * lambda));
    }
    return r;
}

double nearest_distance_pdf(double r, double lambda)
{
    if (r <= 0.0)
        return 0.0;
    return 2.0 * pi * lambda * r * std::exp(-pi * lambda * r * r);
}

double nth_distance_pdf(int i, double r, double lambda)
{
    if (i < 1)
        throw ParamError("nth_distance_pdf: rank must be >= 1");
    if (r <= 0.0)
        return 0.0;
    const double x = pi * lambda * r * r;
    // density of x times dx/dr
    return std::exp((i - 1) * std::log(x) - x - std::lgamma(i)) * 2.0 * pi * lambda * r;
}

double joint_two_nearest_pdf(double r1, double r2, double lambda)
{
    if (r1 <= 0.0 || r1 > r2)
        return 0.0;
    return 4.0 * pi * pi * lambda * lambda * r1 * r2 * std::exp(-pi * lambda * r2 * r2);
}

double two_nearest_survival(double r1, double r2, double lambda)
{
    if (r1 > r2)
        throw ParamError("two_nearest_survival: need r1 <= r2");
    const double ring = lambda * pi * (r2 * r2 - r1 * r1);
    return (std::exp(-ring) + ring * std::exp(-ring)) * std::exp(-lambda * pi * r1 * r1);
}

double mean_inverse_pow_distance(int i, double lambda, double alpha)
{
    if (i < 1)
        throw ParamError("mean_inverse_pow_distance: rank must be >= 1");
    if (!(static_cast<double>(i) > alpha / 2.0))
        throw DivergentMomentError("divergent moment: E[r_" + std::to_string(i) + "^-alpha] is infinite for alpha = " +
                                   std::to_string(alpha) + " (Gamma(i - alpha/2) needs i > alpha/2)");
    return std::pow(pi * lambda, alpha / 2.0) * std::exp(std::lgamma(i - alpha / 2.0) - std::lgamma(i));
}

double mean_inverse_pow_distance(int i, const SystemParams& params)
{
    return mean_inverse_pow_distance(i, params.lambda(), params.path_loss_exp());
}

double residual_mean_power(int n, const SystemParams& params)
{
    require_alpha4(params, "residual_mean_power");
    if (n < 2)
        throw ParamError("residual_mean_power: association order must be >= 2");
    const double pl = pi * params.lambda();
    return params.snr_scale() * params.num_antennas() * pl * pl * static_cast<double>(n - 2) /
           static_cast<double>(n - 1);
}

}  // namespace crancap
