// Copyright 2026 The gqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GQI_CONFIG_HPP
#define GQI_CONFIG_HPP

#include <filesystem>
#include <string_view>

#include "gqi/probes.hpp"

namespace gqi {

/// Probe and target settings as read from a config file and CLI flags.
struct RunConfig {
  ProbeSpec probe = ProbeSpec::tmsv(1.0);
  TargetScenario scenario{0.01, 3800.0, 1e7};
};

/// Sets one key (probe.kind, probe.n0, probe.n1, probe.n2, probe.ns,
/// scenario.kappa, scenario.nb, scenario.ensembles).
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat `key = value` lines. Blank lines and lines starting with `#` are
/// ignored; unknown or repeated keys are errors.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

}  // namespace gqi

#endif  // GQI_CONFIG_HPP
