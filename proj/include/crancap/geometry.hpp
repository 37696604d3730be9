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

#ifndef CRANCAP_GEOMETRY_HPP
#define CRANCAP_GEOMETRY_HPP

#include "crancap/params.hpp"
#include "crancap/random.hpp"

#include <cstddef>
#include <vector>

namespace crancap {

/// One PPP realization seen from the user at the origin.
struct Deployment {
    std::vector<double> distances;  // ascending, each in (0, R]

    std::size_t n_rrh() const noexcept { return distances.size(); }
};

/// N_R ~ Poisson(pi R^2 lambda) points uniform on the disc; distances sorted.
Deployment sample_deployment(const SystemParams& params, RandomEngine& rng);
/// As sample_deployment, reusing the storage of @p out.
void sample_deployment_into(const SystemParams& params, RandomEngine& rng, Deployment& out);

/// Fast path: the n smallest distances of a PPP on the whole plane, from
/// pi lambda r_i^2 = cumulative sums of Exp(1). Agrees in law with
/// sample_deployment conditioned on r_n <= R.
std::vector<double> sample_ordered_distances(double lambda, std::size_t n, RandomEngine& rng);

/// 2 pi lambda r exp(-pi lambda r^2), the nearest-RRH distance density.
double nearest_distance_pdf(double r, double lambda);

/// Density of the i-th nearest distance: pi lambda r_i^2 ~ Gamma(i, 1).
double nth_distance_pdf(int i, double r, double lambda);

/// 4 pi^2 lambda^2 r1 r2 exp(-pi lambda r2^2) on 0 < r1 <= r2, zero otherwise.
double joint_two_nearest_pdf(double r1, double r2, double lambda);

/// P(no RRH within r1, at most one in the ring r1..r2), whose mixed
/// derivative is the joint two-nearest density.
double two_nearest_survival(double r1, double r2, double lambda);

/// E[r_i^-alpha] = (pi lambda)^(alpha/2) Gamma(i - alpha/2) / Gamma(i).
/// Finite only for i > alpha/2; otherwise DivergentMomentError.
double mean_inverse_pow_distance(int i, double lambda, double alpha);
double mean_inverse_pow_distance(int i, const SystemParams& params);

/// S = rho L (pi lambda)^2 (n-2)/(n-1): mean SNR contributed by RRHs 3..n
/// at alpha = 4 with fading replaced by its mean. Zero for n = 2.
double residual_mean_power(int n, const SystemParams& params);

}  // namespace crancap

#endif  // CRANCAP_GEOMETRY_HPP
