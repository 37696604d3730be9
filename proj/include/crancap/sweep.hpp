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

#ifndef CRANCAP_SWEEP_HPP
#define CRANCAP_SWEEP_HPP

#include "crancap/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crancap {

enum class SweepAxis { TxPower, NumAntennas, Lambda, AssocN };
enum class Method { AnalyticClosed, AnalyticNumeric, MonteCarlo };

std::string_view to_string(SweepAxis axis);
std::string_view to_string(Method method);
SweepAxis parse_axis(std::string_view text);
Method parse_method(std::string_view text);

/// One association curve of a sweep. `Unbounded` is the N -> infinity
/// limit: the large-N bound analytically, NNearest(mc_limit_n) in Monte Carlo.
struct SweepStrategy {
    enum class Kind { Nearest, Best, Unbounded };

    Kind kind = Kind::Nearest;
    int n = 1;

    std::string label() const;  // "nearest:2", "best:4", "nearest:inf"
    /// Accepts "2", "inf", "nearest:2", "best:4", "nearest:inf".
    static SweepStrategy parse(std::string_view text);

    friend bool operator==(const SweepStrategy&, const SweepStrategy&) = default;
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::TxPower;
    /// tx_power in dBm, lambda in m^-2, antennas and assoc_n as counts
    /// (assoc_n accepts +inf as a last value).
    std::vector<double> values{10.0};
    RawParams fixed;
    std::vector<Method> methods{Method::AnalyticClosed, Method::AnalyticNumeric};
    std::vector<SweepStrategy> strategies{SweepStrategy{}};
    /// Curve kind for axis = assoc_n.
    SweepStrategy::Kind assoc_kind = SweepStrategy::Kind::Nearest;
    std::vector<double> thresholds_db;  // non-empty adds outage records
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    std::string output_path;  // empty: caller handles output
    bool capacity_in_bps = false;
    int mc_limit_n = 64;

    /// Throws ParamError naming the offending field.
    void validate() const;
};

struct ResultRecord {
    std::string axis;
    double axis_value = 0;
    double lambda = 0;
    int num_antennas = 0;
    double path_loss_exp = 0;
    double tx_power_w = 0;
    double noise_psd_w_per_hz = 0;
    double bandwidth_hz = 0;
    double disc_radius_m = 0;
    double snr_scale = 0;
    std::optional<double> threshold;
    std::string method;
    std::string strategy;
    std::string metric;  // outage | capacity_bps_hz | capacity_bps
    double value = 0;
    std::optional<double> std_error;     // Monte Carlo only
    std::optional<double> err_estimate;  // analytic only
    double runtime_ms = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Fixed column order of the CSV output.
const std::vector<std::string>& csv_header();
void write_csv(std::ostream& out, const std::vector<ResultRecord>& records);
/// Inverse of write_csv; throws ParamError on a malformed header or row.
std::vector<ResultRecord> read_csv(std::istream& in);

struct McRunInfo {
    double axis_value = 0;
    std::size_t resampled_draws = 0;
    double resample_fraction = 0;
};

/// Limit-law bound minus Monte Carlo NNearest(mc_limit_n) at one sweep point.
struct LimitGap {
    double axis_value = 0;
    double bound = 0;
    double monte_carlo = 0;
    double gap = 0;
};

struct SweepOutcome {
    std::vector<ResultRecord> records;  // sorted by (axis value, method, strategy)
    std::vector<std::string> failures;  // quadrature failures, one message each
    std::vector<std::string> warnings;  // closed forms outside their high-SNR range
    std::vector<McRunInfo> mc_runs;
    std::vector<LimitGap> limit_gaps;  // when both an analytic and an MC nearest:inf curve exist
};

/// Evaluates every method at every sweep point. Writes CSV and a
/// `<output_path>.meta.json` sidecar when output_path is set.
SweepOutcome run_sweep(const SweepSpec& spec);

/// Writes the JSON sidecar describing a finished sweep.
void write_metadata(std::ostream& out, const SweepSpec& spec, const SweepOutcome& outcome);

SweepSpec preset_fig1();
SweepSpec preset_fig2();

inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace crancap

#endif  // CRANCAP_SWEEP_HPP
