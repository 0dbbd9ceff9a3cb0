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

#ifndef GQI_TABLE_IO_HPP
#define GQI_TABLE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gqi/experiment.hpp"

namespace gqi {

inline constexpr std::string_view kCsvHeader =
    "axis_value,n0,n1,n2,ns,kappa,nb,ensembles,kind,s_star,q_min,log_error_prob,snr,discord";

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);
/// Locale-independent parse of the whole of `text`; throws ValidationError.
double parse_double(std::string_view text);

/// Axis metadata goes into leading `# key=value` comment lines, followed by
/// the header row and one line per SweepRow. Optional cells are left empty.
void write_csv(std::ostream& out, const SweepTable& table);
std::string to_csv(const SweepTable& table);
SweepTable read_csv(std::istream& in);
SweepTable parse_csv(std::string_view text);

void write_csv_file(const std::filesystem::path& path, const SweepTable& table);
SweepTable read_csv_file(const std::filesystem::path& path);

}  // namespace gqi

#endif  // GQI_TABLE_IO_HPP
