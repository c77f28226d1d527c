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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Seeded, desk-scale verification suites for the identities and inequalities
// the distance families are expected to satisfy. Each check reports the
// largest deviation observed and the tolerance it is held to.
namespace setmetric::verify {

struct Check
{
  std::string suite;
  std::string name;
  double      deviation = 0.0;
  double      tolerance = 0.0;
  bool        passed    = false;
  std::string detail;
};

/// identities, appendixA, appendixB, duality, interval
std::span<const std::string_view> suite_names();

/// Throws InvalidParameter for an unknown suite. "all" runs every suite.
std::vector<Check> run_suite(std::string_view suite, std::uint64_t seed);

}  // namespace setmetric::verify
