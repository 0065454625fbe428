// SPDX-License-Identifier: Apache-2.0
//
// beamtrain - statistically-ranked RF beam training for sparse MIMO channels
// Copyright (C) 2026 beamtrain authors
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

#ifndef BEAMTRAIN_ERRORS_HPP
#define BEAMTRAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beamtrain {

/// Invalid domain data: PMFs that do not sum to one, non-partitions,
/// malformed configs, dimension mismatches.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// File or stream failures while reading/writing configs and results.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace beamtrain

#endif
