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

#include "crancap/quadrature.hpp"

#include "crancap/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace crancap {

namespace {

// Kronrod 15-point abscissae/weights with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double a, b, value, error;
};

// Integrand on a finite parameter interval, after the panel's change of variables.
struct Mapped {
    const Integrand* f;
    enum class Kind { Identity, SqrtLower, UpperInf, LowerInf } kind;
    double origin;
    double width;  // scale for infinite maps, panel width for SqrtLower
    InfiniteTransform transform;

    double operator()(double t, long& evals) const
    {
        double x = t, jac = 1.0;
        switch (kind) {
        case Kind::Identity: break;
        case Kind::SqrtLower:
            x = origin + width * t * t;
            jac = 2.0 * width * t;
            break;
        case Kind::UpperInf:
        case Kind::LowerInf: {
            double dist;
            if (transform == InfiniteTransform::Rational) {
                dist = width * (1.0 - t) / t;
                jac = width / (t * t);
            } else {
                dist = -width * std::log(t);
                jac = width / t;
            }
            x = (kind == Kind::UpperInf) ? origin + dist : origin - dist;
            if (!std::isfinite(x))
                return 0.0;
            break;
        }
        }
        ++evals;
        const double y = (*f)(x);
        if (!std::isfinite(y))
            throw QuadratureError("integrand is not finite at x = " + std::to_string(x), {});
        const double v = y * jac;
        return std::isfinite(v) ? v : 0.0;
    }
};

Panel gauss_kronrod(const Mapped& g, double a, double b, long& evals)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = g(center, evals);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double resabs = std::abs(resk);
    std::array<double, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = g(center - dx, evals);
        f2[j] = g(center + dx, evals);
        resk += kWgk[j] * (f1[j] + f2[j]);
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1)
            resg += kWg[j / 2] * (f1[j] + f2[j]);
    }
    const double mean = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
        err = std::max(err, 50.0 * kEps * resabs);
    return {a, b, value, err};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    return integrate(f, std::vector<double>{a, b}, spec);
}

QuadratureResult integrate(const Integrand& f, const std::vector<double>& points, const QuadratureSpec& spec)
{
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0) || spec.max_subdivisions < 1 || !(spec.scale > 0.0))
        throw ParamError("QuadratureSpec: tolerances, scale and max_subdivisions must be positive");
    if (points.size() < 2)
        throw ParamError("integrate: need at least two limits");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i] >= points[i - 1]))
            throw ParamError("integrate: limits must be non-decreasing");
    for (std::size_t i = 1; i + 1 < points.size(); ++i)
        if (!std::isfinite(points[i]))
            throw ParamError("integrate: interior breakpoints must be finite");

    // Split the real line at 0 when both ends are infinite.
    std::vector<double> pts = points;
    if (pts.size() == 2 && std::isinf(pts.front()) && std::isinf(pts.back()))
        pts.insert(pts.begin() + 1, 0.0);

    std::vector<Mapped> maps;
    QuadratureResult res;

    struct Tagged : Panel {
        int map;
    };
    auto cmp = [](const Tagged& x, const Tagged& y) { return x.error < y.error; };
    std::priority_queue<Tagged, std::vector<Tagged>, decltype(cmp)> panels(cmp);

    auto push = [&](int m, double lo, double hi) {
        Panel p = gauss_kronrod(maps[m], lo, hi, res.evaluations);
        panels.push(Tagged{p, m});
    };

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        if (lo == hi)
            continue;
        const bool first = (i == 0);
        if (std::isinf(lo) && std::isinf(hi))
            throw ParamError("integrate: unsupported panel");
        if (std::isinf(hi)) {
            if (first && spec.lower_singular) {
                maps.push_back({&f, Mapped::Kind::SqrtLower, lo, spec.scale, spec.infinite_transform});
                push(static_cast<int>(maps.size()) - 1, 0.0, 1.0);
                maps.push_back({&f, Mapped::Kind::UpperInf, lo + spec.scale, spec.scale, spec.infinite_transform});
            } else {
                maps.push_back({&f, Mapped::Kind::UpperInf, lo, spec.scale, spec.infinite_transform});
            }
            push(static_cast<int>(maps.size()) - 1, 0.0, 1.0);
        } else if (std::isinf(lo)) {
            maps.push_back({&f, Mapped::Kind::LowerInf, hi, spec.scale, spec.infinite_transform});
            push(static_cast<int>(maps.size()) - 1, 0.0, 1.0);
        } else if (first && spec.lower_singular) {
            maps.push_back({&f, Mapped::Kind::SqrtLower, lo, hi - lo, spec.infinite_transform});
            push(static_cast<int>(maps.size()) - 1, 0.0, 1.0);
        } else {
            maps.push_back({&f, Mapped::Kind::Identity, 0.0, 0.0, spec.infinite_transform});
            push(static_cast<int>(maps.size()) - 1, lo, hi);
        }
    }

    // Panels too narrow to split are retired but still counted.
    double retired_value = 0.0, retired_error = 0.0;
    auto totals = [&](double& value, double& error) {
        value = retired_value;
        error = retired_error;
        auto copy = panels;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
    };

    double total = 0.0, error = 0.0;
    totals(total, error);
    while (true) {
        if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
            break;
        if (panels.empty())
            break;
        if (res.subdivisions >= spec.max_subdivisions) {
            res.value = total;
            res.err_estimate = error;
            throw QuadratureError("quadrature did not converge within " + std::to_string(spec.max_subdivisions) +
                                      " subdivisions (estimate " + std::to_string(total) + ", error " +
                                      std::to_string(error) + ")",
                                  res);
        }
        const Tagged worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) || std::abs(worst.b - worst.a) < 1e3 * kEps * std::abs(mid)) {
            retired_value += worst.value;
            retired_error += worst.error;
            continue;
        }
        Panel left = gauss_kronrod(maps[worst.map], worst.a, mid, res.evaluations);
        Panel right = gauss_kronrod(maps[worst.map], mid, worst.b, res.evaluations);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(Tagged{left, worst.map});
        panels.push(Tagged{right, worst.map});
        ++res.subdivisions;
        // resum periodically against drift in the running totals
        if (res.subdivisions % 64 == 0)
            totals(total, error);
    }
    totals(total, error);
    res.value = total;
    res.err_estimate = error;
    if (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
        throw QuadratureError("quadrature hit the resolution floor (estimate " + std::to_string(total) +
                                  ", error " + std::to_string(error) + ")",
                              res);
    return res;
}

}  // namespace crancap
