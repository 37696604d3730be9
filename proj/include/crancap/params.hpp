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

#ifndef CRANCAP_PARAMS_HPP
#define CRANCAP_PARAMS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crancap {

/// Raised when a parameter set or option violates its domain.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by closed forms that only exist for a specific path-loss exponent.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested distance moment E[r_i^-alpha] is infinite.
class DivergentMomentError : public ParamError {
public:
    using ParamError::ParamError;
};

double db_to_linear(double x_db);
double linear_to_db(double x);
double dbm_to_watts(double x_dbm);
double watts_to_dbm(double watts);

/// Scenario inputs as a user writes them: powers in dBm, everything else SI.
struct RawParams {
    double lambda = 1e-4;            // RRHs per m^2
    int num_antennas = 4;
    double path_loss_exp = 4.0;
    double tx_power_dbm = 10.0;      // 10 mW
    double noise_psd_dbm_hz = -174.0;
    double bandwidth_hz = 100e6;
    double disc_radius_m = 600.0;
};

/// Validated physical scenario. Immutable; every instance satisfies
/// lambda > 0, L >= 1, alpha > 2, P_U > 0, noise > 0, R > 0.
class SystemParams {
public:
    /// Linear-unit constructor. Throws ParamError on any invalid field.
    static SystemParams from_linear(double lambda, int num_antennas, double path_loss_exp,
                                    double tx_power_w, double noise_psd_w_hz,
                                    double bandwidth_hz, double disc_radius_m);

    double lambda() const noexcept { return lambda_; }
    int num_antennas() const noexcept { return num_antennas_; }
    double path_loss_exp() const noexcept { return path_loss_exp_; }
    double tx_power() const noexcept { return tx_power_; }
    double noise_psd() const noexcept { return noise_psd_; }
    double bandwidth() const noexcept { return bandwidth_; }
    double disc_radius() const noexcept { return disc_radius_; }

    /// rho = P_U / (noise_psd * bandwidth).
    double snr_scale() const noexcept { return snr_scale_; }
    /// Expected RRH count in the disc, pi R^2 lambda.
    double mean_rrh_count() const noexcept;
    /// rho (pi lambda)^(alpha/2): SNR of unit fading at the distance where pi lambda r^2 = 1.
    double nearest_snr_scale() const noexcept;
    bool is_alpha4() const noexcept { return path_loss_exp_ == 4.0; }

    SystemParams with_lambda(double lambda) const;
    SystemParams with_num_antennas(int num_antennas) const;
    SystemParams with_path_loss_exp(double alpha) const;
    SystemParams with_tx_power(double tx_power_w) const;
    SystemParams with_disc_radius(double radius_m) const;

private:
    SystemParams() = default;

    double lambda_ = 0;
    int num_antennas_ = 0;
    double path_loss_exp_ = 0;
    double tx_power_ = 0;
    double noise_psd_ = 0;
    double bandwidth_ = 0;
    double disc_radius_ = 0;
    double snr_scale_ = 0;
};

SystemParams build_params(const RawParams& raw);

/// Throws UnsupportedError naming @p what unless alpha == 4.
void require_alpha4(const SystemParams& params, std::string_view what);

struct AssociationStrategy {
    enum class Kind { SingleNearest, NNearest, NBest };

    Kind kind = Kind::SingleNearest;
    int n = 1;

    static AssociationStrategy single_nearest() { return {Kind::SingleNearest, 1}; }
    static AssociationStrategy nearest(int n);
    static AssociationStrategy best(int n);

    /// Number of RRHs a deployment must contain for this strategy.
    int rrhs_required() const noexcept { return n; }
    bool needs_all_rrhs() const noexcept { return kind == Kind::NBest; }
    std::string name() const;
    static AssociationStrategy parse(std::string_view text);

    friend bool operator==(const AssociationStrategy&, const AssociationStrategy&) = default;
};

/// Monte Carlo estimate with a 95% normal-approximation interval.
struct EstimateWithCI {
    double mean = 0;
    double std_error = 0;
    std::size_t n_trials = 0;
    double ci_low = 0;
    double ci_high = 0;

    static constexpr double z95 = 1.959963984540054;

    static EstimateWithCI from_sums(double sum, double sum_sq, std::size_t n);
    static EstimateWithCI from_proportion(std::size_t hits, std::size_t n);
    bool contains(double x) const noexcept { return ci_low <= x && x <= ci_high; }
};

struct SnrSample {
    double gamma = 0;

    explicit SnrSample(double g);
};

}  // namespace crancap

#endif  // CRANCAP_PARAMS_HPP
