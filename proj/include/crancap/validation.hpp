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

#ifndef CRANCAP_VALIDATION_HPP
#define CRANCAP_VALIDATION_HPP

#include "crancap/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace crancap {

struct CheckResult {
    std::string name;
    double measured = 0;   // the gap, statistic or count compared to tolerance
    double tolerance = 0;
    bool passed = false;
    bool informational = false;  // reported, never counted as failure
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    bool all_passed() const noexcept;
    std::size_t failed_count() const noexcept;
    void print(std::ostream& out) const;
};

/// Test hooks that corrupt a formula so the harness can be shown to fail.
struct ValidationHooks {
    double single_closed_offset = 0;  // added to capacity_single_closed
};

/// Runs the analytic-vs-analytic and analytic-vs-Monte-Carlo cross-check
/// matrix. Checks needing alpha = 4 are skipped for other exponents.
ValidationReport validate_run(const SystemParams& params, std::size_t trials, std::uint64_t seed,
                              const ValidationHooks& hooks = {});

/// Threshold grid used by the outage checks: kappa L times {0.1, 0.3, 1, 3, 10}.
std::vector<double> validation_thresholds(const SystemParams& params);

}  // namespace crancap

#endif  // CRANCAP_VALIDATION_HPP
