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

#include "setmetric/axioms.hpp"

namespace setmetric {

std::string_view axiom_name(Axiom axiom) noexcept
{
  switch (axiom)
  {
  case Axiom::M1:
    return "M1";
  case Axiom::M2:
    return "M2";
  case Axiom::M3:
    return "M3";
  case Axiom::M4:
    return "M4";
  case Axiom::M5:
    return "M5";
  case Axiom::PartialM5:
    return "partial-M5";
  }
  return "?";
}

}  // namespace setmetric
