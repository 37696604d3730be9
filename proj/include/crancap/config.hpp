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

#ifndef CRANCAP_CONFIG_HPP
#define CRANCAP_CONFIG_HPP

#include "crancap/sweep.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace crancap {

/// Flag name without leading dashes ("tx-power-dbm") to raw text.
using FlagMap = std::map<std::string, std::string>;

/// Keys understood by parse_config, in flag spelling.
const std::vector<std::string>& config_keys();

/// Merges a JSON config file and command-line flags over @p base.
/// Precedence: flags, then file, then base. File keys may use '-' or '_'.
/// Throws ParamError naming the field on malformed or unknown input.
SweepSpec parse_config(const FlagMap& flags, const std::optional<std::filesystem::path>& config_file,
                       SweepSpec base = SweepSpec{});

}  // namespace crancap

#endif  // CRANCAP_CONFIG_HPP
