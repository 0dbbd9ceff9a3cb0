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

#include "gqi/table_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace gqi {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::optional<double> parse_optional(std::string_view text) {
  if (text.empty()) return std::nullopt;
  return parse_double(text);
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: buffer too small");
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ValidationError(fmt::format("'{}' is not a number", text));
  }
  return value;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << "# axis=" << to_string(table.axis) << '\n';
  if (!table.grid.empty()) {
    out << "# grid=";
    for (std::size_t i = 0; i < table.grid.size(); ++i) out << (i ? ";" : "") << format_double(table.grid[i]);
    out << '\n';
  }
  for (const auto& msg : table.skipped) out << "# skipped=" << msg << '\n';
  out << kCsvHeader << '\n';
  for (const auto& r : table.rows) {
    out << format_optional(r.axis_value) << ',' << format_double(r.probe.n0) << ',' << format_double(r.probe.n1)
        << ',' << format_double(r.probe.n2) << ',' << format_double(r.probe.signal_photons()) << ','
        << format_double(r.scenario.kappa) << ',' << format_double(r.scenario.nb) << ','
        << format_double(r.scenario.ensembles) << ',' << to_string(r.probe.kind) << ',' << format_double(r.s_star)
        << ',' << format_double(r.q_min) << ',' << format_double(r.log_error_prob) << ','
        << format_double(r.snr) << ',' << format_optional(r.discord) << '\n';
  }
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

SweepTable read_csv(std::istream& in) {
  SweepTable table;
  bool header_seen = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view view(line);
    if (view.front() == '#') {
      view.remove_prefix(1);
      while (!view.empty() && view.front() == ' ') view.remove_prefix(1);
      const std::size_t eq = view.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = view.substr(0, eq);
      const std::string_view value = view.substr(eq + 1);
      if (key == "axis") {
        table.axis = parse_sweep_axis(value);
      } else if (key == "grid") {
        if (!value.empty()) {
          for (auto cell : split(value, ';')) table.grid.push_back(parse_double(cell));
        }
      } else if (key == "skipped") {
        table.skipped.emplace_back(value);
      }
      continue;
    }
    if (!header_seen) {
      if (view != kCsvHeader) throw ValidationError(fmt::format("line {}: unexpected CSV header '{}'", line_no, view));
      header_seen = true;
      continue;
    }
    const auto cells = split(view, ',');
    if (cells.size() != 14) {
      throw ValidationError(fmt::format("line {}: expected 14 columns, found {}", line_no, cells.size()));
    }
    try {
      SweepRow r;
      r.axis_value = parse_optional(cells[0]);
      r.probe.kind = parse_probe_kind(cells[8]);
      r.probe.n0 = parse_double(cells[1]);
      r.probe.n1 = parse_double(cells[2]);
      r.probe.n2 = parse_double(cells[3]);
      if (r.probe.kind == ProbeKind::kCoherent) r.probe.ns = parse_double(cells[4]);
      r.scenario.kappa = parse_double(cells[5]);
      r.scenario.nb = parse_double(cells[6]);
      r.scenario.ensembles = parse_double(cells[7]);
      r.s_star = parse_double(cells[9]);
      r.q_min = parse_double(cells[10]);
      r.log_error_prob = parse_double(cells[11]);
      r.snr = parse_double(cells[12]);
      r.discord = parse_optional(cells[13]);
      table.rows.push_back(std::move(r));
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  if (!header_seen) throw ValidationError("CSV has no header row");
  return table;
}

SweepTable parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_csv(in);
}

void write_csv_file(const std::filesystem::path& path, const SweepTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  write_csv(out, table);
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
}

SweepTable read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(fmt::format("cannot open '{}'", path.string()));
  return read_csv(in);
}

}  // namespace gqi
