// Copyright 2026 The unitary-fanout developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ufan {

struct ZeroVectorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositivePowerError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CalibrationLengthMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct MalformedSettingsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidEfficiencyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateFitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownPresetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ufan
