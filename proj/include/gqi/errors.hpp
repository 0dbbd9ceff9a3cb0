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

#ifndef GQI_ERRORS_HPP
#define GQI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gqi {

/// Raised when an input violates a documented precondition (bad parameter,
/// non-physical covariance, malformed file). The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gqi

#endif  // GQI_ERRORS_HPP
