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

#ifndef CRANCAP_ANALYTIC_HPP
#define CRANCAP_ANALYTIC_HPP

// Outage and ergodic-capacity expressions for nearest-RRH association.
//
// Integrals are evaluated in the normalized distance x = pi lambda r^2, in
// which the nearest distance is Exp(1) and the two nearest have joint density
// exp(-x2) on 0 < x1 < x2. SNRs are rho H r^-alpha = kappa H x^-(alpha/2) with
// kappa = SystemParams::nearest_snr_scale(). Capacities are in bps/Hz.

#include "crancap/params.hpp"
#include "crancap/quadrature.hpp"

namespace crancap {

/// Quadrature-backed value with its error estimate.
struct Evaluation {
    double value = 0;
    double err_estimate = 0;

    operator double() const noexcept { return value; }
};

enum class OutageTwoMode {
    ExactDouble,       ///< joint two-nearest pdf against the exact Gamma(L,1) fading law
    MeanFadingSingle,  ///< fading replaced by its mean L; single integral over r2
};

enum class CapacityTwoMode { NumericIntegral, ClosedAlpha4 };

enum class CapacityNMode {
    SingleIntegral,  ///< inner SNR integral done in closed form (ln + arctan terms)
    DoubleIntegral,  ///< two-nearest SNR pdf against log2(1 + S + z)
};

/// Lambda exponent in the large-N SNR law exp(-L rho pi^3 lambda^k / (4 gamma)).
enum class LimitPdfVariant {
    PaperLambda4,       ///< k = 4 as printed; mass 1/lambda
    NormalizedLambda2,  ///< k = 2; a proper density (Levy, index 1/2)
};

enum class UpperBoundMode {
    NumericIntegral,      ///< log2(1 + gamma) against the limit pdf
    ClosedForm,           ///< high-SNR closed form, (C + 2 ln 2 + ln c) / ln 2
    ClosedFormAsPrinted,  ///< same with the series subtracted, (C - 2 ln 2 + ln c) / ln 2
};

/// High-SNR closed forms are trusted above this capacity (bps/Hz).
inline constexpr double kClosedFormMinCapacity = 3.0;
bool closed_form_reliable(double capacity_bps_hz) noexcept;

// -- single nearest RRH ------------------------------------------------------

/// P[rho H r1^-alpha < T] averaged over the nearest-distance law.
Evaluation outage_single(double threshold, const SystemParams& params);

/// SNR density of single-nearest association (derivative of outage_single in T).
Evaluation snr_pdf_single(double gamma, const SystemParams& params);

/// [H_{L-1} + (alpha/2)(ln(pi lambda) + C) - C + ln rho] / ln 2. Valid at high SNR
/// only; may go negative for tiny rho lambda^(alpha/2) and is returned as-is.
double capacity_single_closed(const SystemParams& params);

/// E[log2(1 + gamma) | r] for the single nearest RRH at distance r.
Evaluation conditional_capacity_single(double r, const SystemParams& params);

/// Exact log2(1 + gamma) integrated against the single-nearest SNR law.
Evaluation capacity_single_numeric(const SystemParams& params);

// -- two nearest RRHs --------------------------------------------------------

Evaluation outage_two(double threshold, const SystemParams& params, OutageTwoMode mode);

/// Mean-fading two-nearest SNR density; zero for gamma <= 0.
Evaluation snr_pdf_two(double gamma, const SystemParams& params);

/// ClosedAlpha4 = [ln(2 rho L) + pi/2 - 2 + 2C + 2 ln(pi lambda)] / ln 2 (alpha = 4 only).
Evaluation capacity_two(const SystemParams& params, CapacityTwoMode mode);

// -- N nearest RRHs (alpha = 4) ----------------------------------------------

/// Outage with RRHs 3..n replaced by their mean power S = residual_mean_power(n).
/// Zero when T <= S.
Evaluation outage_n(double threshold, int n, const SystemParams& params);

/// E[log2(1 + S + Z)] with Z the mean-fading two-nearest SNR.
Evaluation capacity_n(int n, const SystemParams& params, CapacityNMode mode = CapacityNMode::SingleIntegral);

// -- N -> infinity ------------------------------------------------------------

double snr_pdf_limit(double gamma, const SystemParams& params,
                     LimitPdfVariant variant = LimitPdfVariant::NormalizedLambda2);

/// Integral of snr_pdf_limit over (0, gamma]; tends to the variant's total mass.
double snr_cdf_limit(double gamma, const SystemParams& params,
                     LimitPdfVariant variant = LimitPdfVariant::NormalizedLambda2);

Evaluation capacity_upper(const SystemParams& params, UpperBoundMode mode,
                          LimitPdfVariant variant = LimitPdfVariant::NormalizedLambda2);

}  // namespace crancap

#endif  // CRANCAP_ANALYTIC_HPP
