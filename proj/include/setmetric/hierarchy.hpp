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

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "setmetric/base_metric.hpp"
#include "setmetric/registry.hpp"

namespace setmetric {

/// A level-k set of sets: level 0 is a single element, level k > 0 a
/// non-empty collection of level k-1 nested sets. Children are kept sorted
/// and deduplicated, so structural equality is set equality at every level.
class NestedSet
{
public:
  static NestedSet leaf(ElementIndex element);

  /// Throws DomainError when `children` is empty or mixes levels.
  static NestedSet collection(std::vector<NestedSet> children);

  /// The level-1 nested set with the members of `set`.
  static NestedSet from_set(FiniteSet const &set);

  std::size_t level() const noexcept { return level_; }
  ElementIndex element() const noexcept { return element_; }
  std::vector<NestedSet> const &children() const noexcept { return children_; }
  std::size_t size() const noexcept { return children_.size(); }

  /// Leaves in sorted order; requires level() == 1.
  std::vector<ElementIndex> elements() const;

  friend bool operator==(NestedSet const &, NestedSet const &) = default;
  friend std::strong_ordering operator<=>(NestedSet const &a, NestedSet const &b);

private:
  std::size_t            level_   = 0;
  ElementIndex           element_ = 0;
  std::vector<NestedSet> children_;
};

inline constexpr std::size_t kDefaultMaxLevel = 4;

/// f_k on level-k nested sets: the base distance at k = 0, the average metric
/// at k = 1, and for k > 1 the average-metric construction with f_{k-1} as the
/// ground distance. Throws DomainError on a level mismatch or when the level
/// exceeds `max_level`.
double f_k(BaseMetric const &metric, ElementRegistry const &registry, NestedSet const &a,
           NestedSet const &b, std::size_t max_level = kDefaultMaxLevel);

inline constexpr std::size_t kMaxContainingGround = 20;

/// C(a): every non-empty subset of `ground` that contains `a`, as a level-2
/// nested set with 2^{|ground|-1} members.
NestedSet containing_collection(ElementIndex a, FiniteSet const &ground);

/// |C(a) sym C(b)| over the non-empty subsets of `ground`.
std::size_t containing_symdiff(ElementIndex a, ElementIndex b, FiniteSet const &ground);

struct DualityPair
{
  ElementIndex a;
  ElementIndex b;
  double       f2;     // f_2(C(a), C(b))
  double       ratio;  // f2 / d(a, b)
};

struct DualityResult
{
  double                   kappa = 0.0;  // ratio of the first pair
  double                   spread = 0.0; // max |ratio - kappa| over pairs
  bool                     constant = false;
  bool                     in_unit_interval = false;
  std::vector<DualityPair> pairs;       // sorted by (a, b)
};

inline constexpr std::size_t kMaxDualityGround = 12;

/// f_2(C(a), C(b)) / d(a, b) for every pair a < b of `ground` under
/// discrete(lambda). Pairs are evaluated in parallel and reported in order.
/// `constant` holds when the spread is within `tolerance`.
DualityResult duality_kappa(FiniteSet const &ground, double lambda, double tolerance = 1e-9);

}  // namespace setmetric
