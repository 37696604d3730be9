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

#include "crancap/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace crancap {

namespace {

void check_positive(double v, const char* field)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw ParamError(std::string(field) + " must be positive and finite, got " + std::to_string(v));
}

}  // namespace

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x)
{
    if (!(x > 0.0))
        throw ParamError("linear_to_db: input must be positive, got " + std::to_string(x));
    return 10.0 * std::log10(x);
}

double dbm_to_watts(double x_dbm) { return db_to_linear(x_dbm - 30.0); }
double watts_to_dbm(double watts) { return linear_to_db(watts) + 30.0; }

SystemParams SystemParams::from_linear(double lambda, int num_antennas, double path_loss_exp,
                                       double tx_power_w, double noise_psd_w_hz,
                                       double bandwidth_hz, double disc_radius_m)
{
    check_positive(lambda, "lambda");
    if (num_antennas < 1)
        throw ParamError("num_antennas must be >= 1, got " + std::to_string(num_antennas));
    if (!std::isfinite(path_loss_exp) || !(path_loss_exp > 2.0))
        throw DivergentMomentError("path_loss_exp must exceed 2: moment Gamma(i - alpha/2) diverges for alpha = " +
                         std::to_string(path_loss_exp));
    check_positive(tx_power_w, "tx_power");
    check_positive(noise_psd_w_hz, "noise_psd");
    check_positive(bandwidth_hz, "bandwidth");
    check_positive(disc_radius_m, "disc_radius");

    SystemParams p;
    p.lambda_ = lambda;
    p.num_antennas_ = num_antennas;
    p.path_loss_exp_ = path_loss_exp;
    p.tx_power_ = tx_power_w;
    p.noise_psd_ = noise_psd_w_hz;
    p.bandwidth_ = bandwidth_hz;
    p.disc_radius_ = disc_radius_m;
    p.snr_scale_ = tx_power_w / (noise_psd_w_hz * bandwidth_hz);
    return p;
}

double SystemParams::mean_rrh_count() const noexcept
{
    return std::numbers::pi * disc_radius_ * disc_radius_ * lambda_;
}

double SystemParams::nearest_snr_scale() const noexcept
{
    return snr_scale_ * std::pow(std::numbers::pi * lambda_, path_loss_exp_ / 2.0);
}

SystemParams SystemParams::with_lambda(double lambda) const
{
    return from_linear(lambda, num_antennas_, path_loss_exp_, tx_power_, noise_psd_, bandwidth_, disc_radius_);
}

SystemParams SystemParams::with_num_antennas(int num_antennas) const
{
    return from_linear(lambda_, num_antennas, path_loss_exp_, tx_power_, noise_psd_, bandwidth_, disc_radius_);
}

SystemParams SystemParams::with_path_loss_exp(double alpha) const
{
    return from_linear(lambda_, num_antennas_, alpha, tx_power_, noise_psd_, bandwidth_, disc_radius_);
}

SystemParams SystemParams::with_tx_power(double tx_power_w) const
{
    return from_linear(lambda_, num_antennas_, path_loss_exp_, tx_power_w, noise_psd_, bandwidth_, disc_radius_);
}

SystemParams SystemParams::with_disc_radius(double radius_m) const
{
    return from_linear(lambda_, num_antennas_, path_loss_exp_, tx_power_, noise_psd_, bandwidth_, radius_m);
}

SystemParams build_params(const RawParams& raw)
{
    if (!std::isfinite(raw.tx_power_dbm))
        throw ParamError("tx_power_dbm must be finite");
    if (!std::isfinite(raw.noise_psd_dbm_hz))
        throw ParamError("noise_psd_dbm_hz must be finite");
    return SystemParams::from_linear(raw.lambda, raw.num_antennas, raw.path_loss_exp,
                                     dbm_to_watts(raw.tx_power_dbm), dbm_to_watts(raw.noise_psd_dbm_hz),
                                     raw.bandwidth_hz, raw.disc_radius_m);
}

void require_alpha4(const SystemParams& params, std::string_view what)
{
    if (!params.is_alpha4())
        throw UnsupportedError(std::string(what) + " requires path_loss_exp = 4, got " +
                               std::to_string(params.path_loss_exp()));
}

AssociationStrategy AssociationStrategy::nearest(int n)
{
    if (n < 1)
        throw ParamError("association order must be >= 1, got " + std::to_string(n));
    return {Kind::NNearest, n};
}

AssociationStrategy AssociationStrategy::best(int n)
{
    if (n < 1)
        throw ParamError("association order must be >= 1, got " + std::to_string(n));
    return {Kind::NBest, n};
}

std::string AssociationStrategy::name() const
{
    switch (kind) {
    case Kind::SingleNearest: return "single";
    case Kind::NNearest: return "nearest:" + std::to_string(n);
    case Kind::NBest: return "best:" + std::to_string(n);
    }
    return "?";
}

AssociationStrategy AssociationStrategy::parse(std::string_view text)
{
    if (text == "single")
        return single_nearest();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParamError("unknown strategy '" + std::string(text) + "'");
    const auto head = text.substr(0, colon);
    const auto tail = text.substr(colon + 1);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
        throw ParamError("strategy '" + std::string(text) + "': malformed order");
    if (head == "nearest")
        return nearest(n);
    if (head == "best")
        return best(n);
    throw ParamError("unknown strategy '" + std::string(text) + "'");
}

EstimateWithCI EstimateWithCI::from_sums(double sum, double sum_sq, std::size_t n)
{
    if (n == 0)
        throw ParamError("estimate needs at least one trial");
    EstimateWithCI e;
    e.n_trials = n;
    e.mean = sum / static_cast<double>(n);
    double var = 0.0;
    if (n > 1)
        var = std::max(0.0, (sum_sq - sum * e.mean) / static_cast<double>(n - 1));
    e.std_error = std::sqrt(var / static_cast<double>(n));
    e.ci_low = e.mean - z95 * e.std_error;
    e.ci_high = e.mean + z95 * e.std_error;
    return e;
}

EstimateWithCI EstimateWithCI::from_proportion(std::size_t hits, std::size_t n)
{
    if (n == 0)
        throw ParamError("estimate needs at least one trial");
    EstimateWithCI e;
    e.n_trials = n;
    e.mean = static_cast<double>(hits) / static_cast<double>(n);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(n));
    e.ci_low = e.mean - z95 * e.std_error;
    e.ci_high = e.mean + z95 * e.std_error;
    return e;
}

SnrSample::SnrSample(double g) : gamma(g)
{
    if (!(g >= 0.0))
        throw ParamError("SNR must be non-negative, got " + std::to_string(g));
}

}  // namespace crancap
