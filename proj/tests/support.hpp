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

#include <vector>

#include "oracle.hpp"
#include "setmetric/registry.hpp"

namespace testing_support {

inline std::vector<oracle::Pt> points(setmetric::FiniteSet const &s)
{
  std::vector<oracle::Pt> out;
  for (auto m : s.members())
  {
    auto p = s.registry()->payload(m);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

inline std::vector<int> indices(setmetric::FiniteSet const &s)
{
  return {s.members().begin(), s.members().end()};
}

inline double unit_discrete(int a, int b)
{
  return a == b ? 0.0 : 1.0;
}

}  // namespace testing_support
