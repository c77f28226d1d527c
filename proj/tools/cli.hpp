// Copyright 2026 The setmetric Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace setmetric::cli {

/// Exit codes: 0 success, 1 violations found, 2 usage or validation error,
/// 3 domain error.
inline constexpr int kExitOk         = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage      = 2;
inline constexpr int kExitDomain     = 3;

/// Runs `setmetric` with `args` (not including the program name).
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

/// Shortest round-trip-stable rendering used for every scalar: 12 significant
/// digits, "inf"/"-inf" for infinities, and no negative zero.
std::string format_value(double value);

}  // namespace setmetric::cli
