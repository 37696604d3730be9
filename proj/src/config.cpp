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

#include "crancap/config.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace crancap {

namespace {

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (auto t = trim(item); !t.empty())
            out.push_back(t);
    return out;
}

double to_number(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    if (t == "inf")
        return std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || std::isnan(v))
        throw ParamError("field '" + key + "': malformed number '" + text + "'");
    return v;
}

double to_finite(const std::string& key, const std::string& text)
{
    const double v = to_number(key, text);
    if (!std::isfinite(v))
        throw ParamError("field '" + key + "': value must be finite");
    return v;
}

long long to_integer(const std::string& key, const std::string& text)
{
    const double v = to_finite(key, text);
    if (v != std::floor(v))
        throw ParamError("field '" + key + "': expected an integer, got '" + text + "'");
    return static_cast<long long>(v);
}

std::vector<double> to_numbers(const std::string& key, const std::string& text)
{
    std::vector<double> out;
    for (const auto& item : split_list(text))
        out.push_back(to_number(key, item));
    if (out.empty())
        throw ParamError("field '" + key + "': empty list");
    return out;
}

bool to_bool(const std::string& key, const std::string& text)
{
    if (text == "true" || text == "1")
        return true;
    if (text == "false" || text == "0")
        return false;
    throw ParamError("field '" + key + "': expected true or false");
}

std::string json_to_text(const std::string& key, const nlohmann::json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return os.str();
    }
    if (v.is_array()) {
        std::string joined;
        for (const auto& item : v) {
            if (item.is_array() || item.is_object())
                throw ParamError("field '" + key + "': nested lists are not allowed");
            joined += (joined.empty() ? "" : ",") + json_to_text(key, item);
        }
        return joined;
    }
    throw ParamError("field '" + key + "': unsupported value type");
}

FlagMap read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParamError("field 'config': cannot open '" + path.string() + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParamError("field 'config': " + std::string(e.what()));
    }
    if (!doc.is_object())
        throw ParamError("field 'config': top level must be an object");
    FlagMap out;
    for (const auto& [k, v] : doc.items()) {
        std::string key = k;
        std::replace(key.begin(), key.end(), '_', '-');
        out[key] = json_to_text(key, v);
    }
    return out;
}

void apply(SweepSpec& spec, const std::string& key, const std::string& text)
{
    RawParams& p = spec.fixed;
    if (key == "lambda") {
        p.lambda = to_finite(key, text);
    } else if (key == "antennas") {
        p.num_antennas = static_cast<int>(to_integer(key, text));
    } else if (key == "alpha") {
        p.path_loss_exp = to_finite(key, text);
    } else if (key == "tx-power-dbm") {
        p.tx_power_dbm = to_finite(key, text);
    } else if (key == "noise-psd-dbm-hz") {
        p.noise_psd_dbm_hz = to_finite(key, text);
    } else if (key == "bandwidth-hz") {
        p.bandwidth_hz = to_finite(key, text);
    } else if (key == "radius-m") {
        p.disc_radius_m = to_finite(key, text);
    } else if (key == "assoc-n") {
        spec.strategies.clear();
        for (const auto& item : split_list(text))
            spec.strategies.push_back(SweepStrategy::parse(item));
        if (spec.strategies.empty())
            throw ParamError("field 'assoc-n': empty list");
    } else if (key == "trials") {
        const auto n = to_integer(key, text);
        if (n < 1)
            throw ParamError("field 'trials': must be positive");
        spec.trials = static_cast<std::size_t>(n);
    } else if (key == "seed") {
        const auto n = to_integer(key, text);
        if (n < 0)
            throw ParamError("field 'seed': must be non-negative");
        spec.seed = static_cast<std::uint64_t>(n);
    } else if (key == "out") {
        spec.output_path = text;
    } else if (key == "axis") {
        spec.axis = parse_axis(text);
    } else if (key == "values") {
        spec.values = to_numbers(key, text);
    } else if (key == "methods") {
        spec.methods.clear();
        for (const auto& item : split_list(text))
            spec.methods.push_back(parse_method(item));
    } else if (key == "thresholds-db") {
        spec.thresholds_db.clear();
        for (const auto& item : split_list(text))
            spec.thresholds_db.push_back(to_finite(key, item));
    } else if (key == "bps") {
        spec.capacity_in_bps = to_bool(key, text);
    } else if (key == "limit-n") {
        spec.mc_limit_n = static_cast<int>(to_integer(key, text));
    } else if (key != "strategy") {
        throw ParamError("field '" + key + "': unknown option");
    }
}

// The strategy family applies to every order, so it runs after assoc-n.
void apply_strategy_kind(SweepSpec& spec, const std::string& text)
{
    SweepStrategy::Kind kind;
    if (text == "nearest")
        kind = SweepStrategy::Kind::Nearest;
    else if (text == "best")
        kind = SweepStrategy::Kind::Best;
    else
        throw ParamError("field 'strategy': expected 'nearest' or 'best', got '" + text + "'");
    spec.assoc_kind = kind;
    for (auto& s : spec.strategies) {
        if (s.kind == SweepStrategy::Kind::Unbounded) {
            if (kind == SweepStrategy::Kind::Best)
                throw ParamError("field 'strategy': best association has no infinite order");
            continue;
        }
        s.kind = kind;
    }
}

}  // namespace

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys{
        "lambda", "antennas", "alpha",  "tx-power-dbm", "noise-psd-dbm-hz", "bandwidth-hz", "radius-m",
        "assoc-n", "strategy", "trials", "seed",         "out",              "axis",         "values",
        "methods", "thresholds-db",      "bps",          "limit-n"};
    return keys;
}

SweepSpec parse_config(const FlagMap& flags, const std::optional<std::filesystem::path>& config_file, SweepSpec base)
{
    FlagMap merged;
    if (config_file)
        merged = read_config_file(*config_file);
    for (const auto& [k, v] : flags)
        merged[k] = v;

    SweepSpec spec = std::move(base);
    for (const auto& [k, v] : merged)
        apply(spec, k, v);
    if (auto it = merged.find("strategy"); it != merged.end())
        apply_strategy_kind(spec, it->second);

    // A fixed value for the swept parameter, without explicit values,
    // collapses the sweep to that single point.
    if (!merged.contains("values")) {
        if (spec.axis == SweepAxis::TxPower && merged.contains("tx-power-dbm"))
            spec.values = {spec.fixed.tx_power_dbm};
        else if (spec.axis == SweepAxis::NumAntennas && merged.contains("antennas"))
            spec.values = {static_cast<double>(spec.fixed.num_antennas)};
        else if (spec.axis == SweepAxis::Lambda && merged.contains("lambda"))
            spec.values = {spec.fixed.lambda};
    }
    return spec;
}

}  // namespace crancap
