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

#include <stdexcept>
#include <string>

namespace setmetric {

// A library precondition was violated by the inputs (empty set, null measure,
// unknown id, level mismatch, ...).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// A parameter is outside the range an operation accepts (p sign, nu range,
// mean type index, ...).
class InvalidParameter : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace setmetric
