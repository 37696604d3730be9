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

#ifndef CRANCAP_QUADRATURE_HPP
#define CRANCAP_QUADRATURE_HPP

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace crancap {

/// Maps for semi-infinite panels [a, inf).
enum class InfiniteTransform {
    Rational,     ///< x = a + s (1 - u) / u
    Exponential,  ///< x = a - s ln u
};

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    InfiniteTransform infinite_transform = InfiniteTransform::Rational;
    /// Length scale s of the semi-infinite map; pick the integrand's decay length.
    double scale = 1.0;
    /// Integrable x^-p (p < 1) singularity at the finite lower limit:
    /// the first panel is mapped with x = a + w v^2.
    bool lower_singular = false;
};

struct QuadratureResult {
    double value = 0;
    double err_estimate = 0;
    int subdivisions = 0;
    long evaluations = 0;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadratureResult& partial() const noexcept { return partial_; }

private:
    QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]; either limit may be infinite.
/// Throws QuadratureError when tolerance is not met within max_subdivisions or
/// when the integrand returns a non-finite value.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Same, with interior breakpoints: `points` is the increasing list
/// {a, p1, ..., b}. Refinement is global across all panels.
QuadratureResult integrate(const Integrand& f, const std::vector<double>& points,
                           const QuadratureSpec& spec = {});

}  // namespace crancap

#endif  // CRANCAP_QUADRATURE_HPP
