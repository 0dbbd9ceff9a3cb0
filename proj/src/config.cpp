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

#include "gqi/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "gqi/errors.hpp"
#include "gqi/table_io.hpp"

namespace gqi {
namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  const auto number = [&] {
    try {
      return parse_double(value);
    } catch (const ValidationError&) {
      throw ValidationError(fmt::format("{}: '{}' is not a number", key, value));
    }
  };
  if (key == "probe.kind") {
    config.probe.kind = parse_probe_kind(value);
  } else if (key == "probe.n0") {
    config.probe.n0 = number();
  } else if (key == "probe.n1") {
    config.probe.n1 = number();
  } else if (key == "probe.n2") {
    config.probe.n2 = number();
  } else if (key == "probe.ns") {
    config.probe.ns = number();
  } else if (key == "scenario.kappa") {
    config.scenario.kappa = number();
  } else if (key == "scenario.nb") {
    config.scenario.nb = number();
  } else if (key == "scenario.ensembles") {
    config.scenario.ensembles = number();
  } else {
    throw ValidationError(fmt::format("unknown config key '{}'", key));
  }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::istringstream in{std::string(text)};
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(fmt::format("config line {}: expected 'key = value'", line_no));
    }
    const std::string_view key = trim(view.substr(0, eq));
    if (!seen.emplace(key).second) throw ValidationError(fmt::format("config line {}: '{}' set twice", line_no, key));
    try {
      apply_setting(base, key, trim(view.substr(eq + 1)));
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("config line {}: {}", line_no, e.what()));
    }
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot open config '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), base);
}

}  // namespace gqi
