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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "setmetric/base_metric.hpp"
#include "setmetric/continuous.hpp"
#include "setmetric/hierarchy.hpp"
#include "setmetric/registry.hpp"

namespace setmetric::cli {

/// Input or usage problem; the CLI maps it to exit code 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Workspace
{
  RegistryPtr                          registry;
  BaseMetric                           metric = BaseMetric::discrete(1.0);
  std::map<std::string, FiniteSet>     sets;
  std::map<std::string, IntervalUnion> intervals;
  std::map<std::string, FuzzySet>      fuzzy;
  std::map<std::string, NestedSet>     nested;
};

/// Schema:
///   {"metric":    {"kind": "discrete", "lambda": 1}
///               | {"kind": "euclidean"} | {"kind": "lp", "p": 3}
///               | {"kind": "matrix", "ids": [...], "table": [[...]], "pseudo": false},
///    "elements":  {id: [coordinates]} or [id, ...],
///    "sets":      {name: [id, ...]},
///    "intervals": {name: [[lo, hi], ...]},
///    "fuzzy":     {name: {id: membership}},
///    "nested":    {name: nested arrays of ids}}
/// Ids may be JSON strings or numbers. Without "elements" the registry is
/// every id mentioned anywhere, each with an empty payload.
/// Throws UsageError on schema errors or unresolved ids.
Workspace parse_workspace(nlohmann::json const &doc);
Workspace load_workspace(std::string const &path);

}  // namespace setmetric::cli
