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

#include "crancap/sweep.hpp"

#include "crancap/analytic.hpp"
#include "crancap/montecarlo.hpp"
#include "crancap/quadrature.hpp"
#include "crancap/random.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

namespace crancap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double quantize(double x)
{
    if (!std::isfinite(x))
        return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::strtod(buf, nullptr);
}

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

double parse_double(std::string_view text, std::string_view field)
{
    std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParamError("field '" + std::string(field) + "': malformed number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int strategy_rank(const SweepStrategy& s)
{
    switch (s.kind) {
    case SweepStrategy::Kind::Nearest: return 0;
    case SweepStrategy::Kind::Unbounded: return 1;
    case SweepStrategy::Kind::Best: return 2;
    }
    return 3;
}

struct Keyed {
    double axis_value;
    int method;
    int strategy_kind;
    int strategy_n;
    std::string metric;
    double threshold;
    ResultRecord record;

    auto key() const { return std::tie(axis_value, method, strategy_kind, strategy_n, metric, threshold); }
};

SystemParams point_params(const SweepSpec& spec, double value)
{
    RawParams raw = spec.fixed;
    switch (spec.axis) {
    case SweepAxis::TxPower: raw.tx_power_dbm = value; break;
    case SweepAxis::NumAntennas: raw.num_antennas = static_cast<int>(value); break;
    case SweepAxis::Lambda: raw.lambda = value; break;
    case SweepAxis::AssocN: break;
    }
    return build_params(raw);
}

std::vector<SweepStrategy> point_strategies(const SweepSpec& spec, double value)
{
    if (spec.axis != SweepAxis::AssocN)
        return spec.strategies;
    if (std::isinf(value))
        return {SweepStrategy{SweepStrategy::Kind::Unbounded, 0}};
    return {SweepStrategy{spec.assoc_kind, static_cast<int>(value)}};
}

AssociationStrategy mc_strategy(const SweepStrategy& s, int limit_n)
{
    switch (s.kind) {
    case SweepStrategy::Kind::Nearest:
        return s.n == 1 ? AssociationStrategy::single_nearest() : AssociationStrategy::nearest(s.n);
    case SweepStrategy::Kind::Best: return AssociationStrategy::best(s.n);
    case SweepStrategy::Kind::Unbounded: return AssociationStrategy::nearest(limit_n);
    }
    throw ParamError("unknown strategy kind");
}

using Evaluator = std::function<Evaluation()>;

// Empty when the method has no formula for this strategy.
Evaluator capacity_evaluator(Method method, const SweepStrategy& s, const SystemParams& p)
{
    const bool closed = method == Method::AnalyticClosed;
    switch (s.kind) {
    case SweepStrategy::Kind::Best: return {};
    case SweepStrategy::Kind::Unbounded:
        return [closed, p] {
            return capacity_upper(p, closed ? UpperBoundMode::ClosedForm : UpperBoundMode::NumericIntegral);
        };
    case SweepStrategy::Kind::Nearest: break;
    }
    const int n = s.n;
    if (n == 1) {
        if (closed)
            return [p] { return Evaluation{capacity_single_closed(p), 0.0}; };
        return [p] { return capacity_single_numeric(p); };
    }
    if (n == 2)
        return [closed, p] {
            return capacity_two(p, closed ? CapacityTwoMode::ClosedAlpha4 : CapacityTwoMode::NumericIntegral);
        };
    return [closed, n, p] {
        return capacity_n(n, p, closed ? CapacityNMode::SingleIntegral : CapacityNMode::DoubleIntegral);
    };
}

Evaluator outage_evaluator(Method method, const SweepStrategy& s, const SystemParams& p, double t)
{
    const bool closed = method == Method::AnalyticClosed;
    switch (s.kind) {
    case SweepStrategy::Kind::Best: return {};
    case SweepStrategy::Kind::Unbounded:
        if (!closed)
            return {};
        return [p, t] { return Evaluation{snr_cdf_limit(t, p), 0.0}; };
    case SweepStrategy::Kind::Nearest: break;
    }
    if (s.n == 1)
        return [p, t] { return outage_single(t, p); };
    if (s.n == 2)
        return [closed, p, t] {
            return outage_two(t, p, closed ? OutageTwoMode::MeanFadingSingle : OutageTwoMode::ExactDouble);
        };
    if (!closed)
        return {};
    const int n = s.n;
    return [n, p, t] { return outage_n(t, n, p); };
}

ResultRecord base_record(const SweepSpec& spec, double axis_value, const SystemParams& p)
{
    ResultRecord r;
    r.axis = std::string(to_string(spec.axis));
    r.axis_value = axis_value;
    r.lambda = p.lambda();
    r.num_antennas = p.num_antennas();
    r.path_loss_exp = p.path_loss_exp();
    r.tx_power_w = p.tx_power();
    r.noise_psd_w_per_hz = p.noise_psd();
    r.bandwidth_hz = p.bandwidth();
    r.disc_radius_m = p.disc_radius();
    r.snr_scale = p.snr_scale();
    r.seed = spec.seed;
    return r;
}

void quantize_record(ResultRecord& r)
{
    for (double* x : {&r.axis_value, &r.lambda, &r.path_loss_exp, &r.tx_power_w, &r.noise_psd_w_per_hz,
                      &r.bandwidth_hz, &r.disc_radius_m, &r.snr_scale, &r.value, &r.runtime_ms})
        *x = quantize(*x);
    for (auto* o : {&r.threshold, &r.std_error, &r.err_estimate})
        if (*o)
            **o = quantize(**o);
}

std::string capacity_metric(const SweepSpec& spec)
{
    return spec.capacity_in_bps ? "capacity_bps" : "capacity_bps_hz";
}

struct TaskOutput {
    std::vector<Keyed> records;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
};

Keyed keyed(const ResultRecord& r, Method m, const SweepStrategy& s)
{
    return Keyed{r.axis_value, static_cast<int>(m), strategy_rank(s), s.n, r.metric,
                 r.threshold.value_or(-1.0), r};
}

void run_analytic_point(const SweepSpec& spec, double value, Method method, TaskOutput& out)
{
    const SystemParams p = point_params(spec, value);
    const double scale = spec.capacity_in_bps ? p.bandwidth() : 1.0;
    const std::string where = std::string(to_string(spec.axis)) + "=" + format_double(value);

    auto evaluate = [&](const Evaluator& f, const SweepStrategy& s, ResultRecord rec) {
        if (!f)
            return;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Evaluation e = f();
            rec.runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            rec.value = e.value;
            rec.err_estimate = e.err_estimate;
        } catch (const UnsupportedError&) {
            return;
        } catch (const std::exception& ex) {
            out.failures.push_back(where + " " + rec.method + " " + rec.strategy + " " + rec.metric + ": " +
                                   ex.what());
            return;
        }
        if (rec.metric != "outage") {
            if (method == Method::AnalyticClosed && !closed_form_reliable(rec.value))
                out.warnings.push_back(where + " " + rec.strategy + ": closed form " + format_double(rec.value) +
                                       " bps/Hz is below the high-SNR range");
            rec.value *= scale;
            *rec.err_estimate *= scale;
        }
        quantize_record(rec);
        out.records.push_back(keyed(rec, method, s));
    };

    for (const auto& s : point_strategies(spec, value)) {
        ResultRecord rec = base_record(spec, value, p);
        rec.method = std::string(to_string(method));
        rec.strategy = s.label();
        rec.metric = capacity_metric(spec);
        evaluate(capacity_evaluator(method, s, p), s, rec);
        for (double t_db : spec.thresholds_db) {
            const double t = db_to_linear(t_db);
            rec.metric = "outage";
            rec.threshold = t;
            evaluate(outage_evaluator(method, s, p, t), s, rec);
        }
    }
}

void run_mc_point(const SweepSpec& spec, double value, TaskOutput& out, std::vector<McRunInfo>& runs)
{
    const SystemParams p = point_params(spec, value);
    const auto strategies = point_strategies(spec, value);
    std::vector<AssociationStrategy> assoc;
    for (const auto& s : strategies)
        assoc.push_back(mc_strategy(s, spec.mc_limit_n));

    TrialConfig cfg;
    cfg.n_trials = spec.trials;
    cfg.seed = spec.seed;
    for (double t_db : spec.thresholds_db)
        cfg.threshold_grid.push_back(db_to_linear(t_db));

    const auto t0 = std::chrono::steady_clock::now();
    const SimulationResult sim = simulate(p, assoc, cfg);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    runs.push_back({value, sim.meta.resampled_draws, sim.meta.resample_fraction()});

    const double scale = spec.capacity_in_bps ? p.bandwidth() : 1.0;
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        const auto& tally = sim.tallies[i];
        ResultRecord rec = base_record(spec, value, p);
        rec.method = std::string(to_string(Method::MonteCarlo));
        rec.strategy = strategies[i].label();
        rec.metric = capacity_metric(spec);
        rec.value = tally.capacity.mean * scale;
        rec.std_error = tally.capacity.std_error * scale;
        rec.runtime_ms = ms;
        ResultRecord q = rec;
        quantize_record(q);
        out.records.push_back(keyed(q, Method::MonteCarlo, strategies[i]));
        for (std::size_t k = 0; k < sim.thresholds.size(); ++k) {
            rec.metric = "outage";
            rec.threshold = sim.thresholds[k];
            rec.value = tally.outage[k].mean;
            rec.std_error = tally.outage[k].std_error;
            q = rec;
            quantize_record(q);
            out.records.push_back(keyed(q, Method::MonteCarlo, strategies[i]));
        }
    }
}

}  // namespace

std::string_view to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::TxPower: return "tx_power";
    case SweepAxis::NumAntennas: return "num_antennas";
    case SweepAxis::Lambda: return "lambda";
    case SweepAxis::AssocN: return "assoc_n";
    }
    return "?";
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::AnalyticClosed: return "analytic_closed";
    case Method::AnalyticNumeric: return "analytic_numeric";
    case Method::MonteCarlo: return "monte_carlo";
    }
    return "?";
}

SweepAxis parse_axis(std::string_view text)
{
    for (auto a : {SweepAxis::TxPower, SweepAxis::NumAntennas, SweepAxis::Lambda, SweepAxis::AssocN})
        if (text == to_string(a))
            return a;
    throw ParamError("field 'axis': unknown axis '" + std::string(text) + "'");
}

Method parse_method(std::string_view text)
{
    if (text == "closed")
        return Method::AnalyticClosed;
    if (text == "numeric")
        return Method::AnalyticNumeric;
    if (text == "mc")
        return Method::MonteCarlo;
    for (auto m : {Method::AnalyticClosed, Method::AnalyticNumeric, Method::MonteCarlo})
        if (text == to_string(m))
            return m;
    throw ParamError("field 'methods': unknown method '" + std::string(text) + "'");
}

std::string SweepStrategy::label() const
{
    switch (kind) {
    case Kind::Nearest: return "nearest:" + std::to_string(n);
    case Kind::Best: return "best:" + std::to_string(n);
    case Kind::Unbounded: return "nearest:inf";
    }
    return "?";
}

SweepStrategy SweepStrategy::parse(std::string_view text)
{
    Kind kind = Kind::Nearest;
    std::string_view tail = text;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        const auto head = text.substr(0, colon);
        tail = text.substr(colon + 1);
        if (head == "best")
            kind = Kind::Best;
        else if (head != "nearest")
            throw ParamError("field 'strategy': unknown strategy '" + std::string(text) + "'");
    }
    if (tail == "inf") {
        if (kind == Kind::Best)
            throw ParamError("field 'strategy': best:inf is not defined");
        return {Kind::Unbounded, 0};
    }
    int n = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || n < 1)
        throw ParamError("field 'strategy': malformed order in '" + std::string(text) + "'");
    return {kind, n};
}

void SweepSpec::validate() const
{
    if (values.empty())
        throw ParamError("field 'values': sweep needs at least one value");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw ParamError("field 'values': values must be strictly increasing");
    for (double v : values) {
        if (std::isnan(v) || (std::isinf(v) && axis != SweepAxis::AssocN))
            throw ParamError("field 'values': non-finite value");
        if ((axis == SweepAxis::NumAntennas || axis == SweepAxis::AssocN) && std::isfinite(v) &&
            (v < 1 || v != std::floor(v)))
            throw ParamError("field 'values': " + std::string(to_string(axis)) + " needs positive integers");
    }
    if (axis == SweepAxis::AssocN && assoc_kind == SweepStrategy::Kind::Best && std::isinf(values.back()))
        throw ParamError("field 'values': best association has no infinite order");
    if (methods.empty())
        throw ParamError("field 'methods': at least one method is required");
    if (axis != SweepAxis::AssocN && strategies.empty())
        throw ParamError("field 'strategy': at least one strategy is required");
    if (std::find(methods.begin(), methods.end(), Method::MonteCarlo) != methods.end() &&
        trials < TrialConfig::kMinTrials)
        throw ParamError("field 'trials': at least " + std::to_string(TrialConfig::kMinTrials) + " trials required");
    if (mc_limit_n < 1)
        throw ParamError("field 'limit-n': must be >= 1");
    for (double v : values)
        (void)point_params(*this, v);
}

const std::vector<std::string>& csv_header()
{
    static const std::vector<std::string> header{
        "axis",          "axis_value", "lambda",    "num_antennas", "path_loss_exp",
        "tx_power_w",    "noise_psd_w_per_hz",      "bandwidth_hz", "disc_radius_m",
        "snr_scale",     "threshold",  "method",    "strategy",     "metric",
        "value",         "std_error",  "err_estimate", "runtime_ms", "seed"};
    return header;
}

void write_csv(std::ostream& out, const std::vector<ResultRecord>& records)
{
    const auto& h = csv_header();
    for (std::size_t i = 0; i < h.size(); ++i)
        out << (i ? "," : "") << h[i];
    out << '\n';
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    for (const auto& r : records) {
        out << r.axis << ',' << format_double(r.axis_value) << ',' << format_double(r.lambda) << ','
            << r.num_antennas << ',' << format_double(r.path_loss_exp) << ',' << format_double(r.tx_power_w) << ','
            << format_double(r.noise_psd_w_per_hz) << ',' << format_double(r.bandwidth_hz) << ','
            << format_double(r.disc_radius_m) << ',' << format_double(r.snr_scale) << ',' << opt(r.threshold) << ','
            << r.method << ',' << r.strategy << ',' << r.metric << ',' << format_double(r.value) << ','
            << opt(r.std_error) << ',' << opt(r.err_estimate) << ',' << format_double(r.runtime_ms) << ','
            << r.seed << '\n';
    }
}

std::vector<ResultRecord> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || split(line, ',') != csv_header())
        throw ParamError("csv: unexpected header");
    std::vector<ResultRecord> records;
    auto opt = [](const std::string& s, std::string_view f) -> std::optional<double> {
        if (s.empty())
            return std::nullopt;
        return parse_double(s, f);
    };
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r")
            continue;
        const auto f = split(line, ',');
        if (f.size() != csv_header().size())
            throw ParamError("csv: row has " + std::to_string(f.size()) + " fields");
        ResultRecord r;
        r.axis = f[0];
        r.axis_value = parse_double(f[1], "axis_value");
        r.lambda = parse_double(f[2], "lambda");
        r.num_antennas = static_cast<int>(parse_double(f[3], "num_antennas"));
        r.path_loss_exp = parse_double(f[4], "path_loss_exp");
        r.tx_power_w = parse_double(f[5], "tx_power_w");
        r.noise_psd_w_per_hz = parse_double(f[6], "noise_psd_w_per_hz");
        r.bandwidth_hz = parse_double(f[7], "bandwidth_hz");
        r.disc_radius_m = parse_double(f[8], "disc_radius_m");
        r.snr_scale = parse_double(f[9], "snr_scale");
        r.threshold = opt(f[10], "threshold");
        r.method = f[11];
        r.strategy = f[12];
        r.metric = f[13];
        r.value = parse_double(f[14], "value");
        r.std_error = opt(f[15], "std_error");
        r.err_estimate = opt(f[16], "err_estimate");
        r.runtime_ms = parse_double(f[17], "runtime_ms");
        r.seed = std::stoull(f[18]);
        records.push_back(std::move(r));
    }
    return records;
}

SweepOutcome run_sweep(const SweepSpec& spec)
{
    spec.validate();

    std::vector<std::pair<double, Method>> jobs;
    bool with_mc = false;
    for (double v : spec.values)
        for (Method m : spec.methods) {
            if (m == Method::MonteCarlo)
                with_mc = true;
            else
                jobs.emplace_back(v, m);
        }

    std::vector<TaskOutput> outputs(jobs.size());
    {
        std::atomic<std::size_t> next{0};
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const auto workers = std::min<std::size_t>(hw, std::max<std::size_t>(jobs.size(), 1));
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < jobs.size(); i = next++) {
                    try {
                        run_analytic_point(spec, jobs[i].first, jobs[i].second, outputs[i]);
                    } catch (const std::exception& ex) {
                        outputs[i].failures.push_back(ex.what());
                    }
                }
            });
    }

    SweepOutcome outcome;
    std::vector<Keyed> all;
    auto absorb = [&](TaskOutput& t) {
        for (auto& k : t.records)
            all.push_back(std::move(k));
        outcome.failures.insert(outcome.failures.end(), t.failures.begin(), t.failures.end());
        outcome.warnings.insert(outcome.warnings.end(), t.warnings.begin(), t.warnings.end());
    };
    for (auto& t : outputs)
        absorb(t);
    if (with_mc)
        for (double v : spec.values) {
            TaskOutput t;
            run_mc_point(spec, v, t, outcome.mc_runs);
            absorb(t);
        }

    std::stable_sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) { return a.key() < b.key(); });
    outcome.records.reserve(all.size());
    for (auto& k : all)
        outcome.records.push_back(std::move(k.record));

    for (double v : spec.values) {
        const ResultRecord* bound = nullptr;
        const ResultRecord* mc = nullptr;
        for (const auto& r : outcome.records) {
            if (r.axis_value != quantize(v) || r.strategy != "nearest:inf" || r.metric == "outage")
                continue;
            if (r.method == to_string(Method::MonteCarlo))
                mc = &r;
            else if (!bound || r.method == to_string(Method::AnalyticNumeric))
                bound = &r;
        }
        if (bound && mc)
            outcome.limit_gaps.push_back({v, bound->value, mc->value, bound->value - mc->value});
    }

    if (!spec.output_path.empty()) {
        std::ofstream csv(spec.output_path);
        if (!csv)
            throw ParamError("field 'out': cannot open '" + spec.output_path + "'");
        write_csv(csv, outcome.records);
        std::ofstream meta(spec.output_path + ".meta.json");
        write_metadata(meta, spec, outcome);
    }
    return outcome;
}

void write_metadata(std::ostream& out, const SweepSpec& spec, const SweepOutcome& outcome)
{
    using nlohmann::json;
    json j;
    j["tool"] = "crancap";
    j["version"] = std::string(kToolVersion);
    j["rng_algorithm"] = std::string(kRngAlgorithm);
    j["seed"] = spec.seed;
    j["trials"] = spec.trials;
    j["axis"] = std::string(to_string(spec.axis));
    json values = json::array();
    for (double v : spec.values)
        values.push_back(std::isinf(v) ? json("inf") : json(v));
    j["values"] = values;
    j["params"] = {{"lambda", spec.fixed.lambda},
                   {"num_antennas", spec.fixed.num_antennas},
                   {"path_loss_exp", spec.fixed.path_loss_exp},
                   {"tx_power_dbm", spec.fixed.tx_power_dbm},
                   {"noise_psd_dbm_hz", spec.fixed.noise_psd_dbm_hz},
                   {"bandwidth_hz", spec.fixed.bandwidth_hz},
                   {"disc_radius_m", spec.fixed.disc_radius_m}};
    json methods = json::array();
    for (Method m : spec.methods)
        methods.push_back(std::string(to_string(m)));
    j["methods"] = methods;
    json strategies = json::array();
    for (const auto& s : spec.strategies)
        strategies.push_back(s.label());
    j["strategies"] = strategies;
    j["thresholds_db"] = spec.thresholds_db;
    j["capacity_unit"] = spec.capacity_in_bps ? "bps" : "bps/Hz";
    j["mc_limit_n"] = spec.mc_limit_n;
    json runs = json::array();
    for (const auto& r : outcome.mc_runs)
        runs.push_back({{"axis_value", r.axis_value},
                        {"resampled_draws", r.resampled_draws},
                        {"resample_fraction", r.resample_fraction}});
    j["mc_runs"] = runs;
    json gaps = json::array();
    for (const auto& g : outcome.limit_gaps)
        gaps.push_back({{"axis_value", g.axis_value}, {"bound", g.bound}, {"monte_carlo", g.monte_carlo}, {"gap", g.gap}});
    j["limit_gaps"] = gaps;
    j["records"] = outcome.records.size();
    j["failures"] = outcome.failures;
    j["warnings"] = outcome.warnings;
    out << j.dump(2) << '\n';
}

SweepSpec preset_fig1()
{
    SweepSpec s;
    s.axis = SweepAxis::TxPower;
    s.values.clear();
    for (int k = 0; k <= 10; ++k)
        s.values.push_back(2.0 * k);  // 1 mW .. 100 mW
    s.fixed.num_antennas = 4;
    s.methods = {Method::AnalyticClosed, Method::AnalyticNumeric, Method::MonteCarlo};
    s.strategies = {SweepStrategy::parse("1"), SweepStrategy::parse("2"), SweepStrategy::parse("4"),
                    SweepStrategy::parse("8"), SweepStrategy::parse("inf")};
    s.output_path = "fig1.csv";
    return s;
}

SweepSpec preset_fig2()
{
    SweepSpec s = preset_fig1();
    s.axis = SweepAxis::NumAntennas;
    s.values = {1, 2, 4, 8};
    s.fixed.tx_power_dbm = 10.0;
    s.output_path = "fig2.csv";
    return s;
}

}  // namespace crancap
