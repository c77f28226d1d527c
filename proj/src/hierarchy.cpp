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

#include "setmetric/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"

namespace setmetric {

NestedSet NestedSet::leaf(ElementIndex element)
{
  NestedSet n;
  n.element_ = element;
  return n;
}

NestedSet NestedSet::collection(std::vector<NestedSet> children)
{
  if (children.empty())
  {
    throw DomainError("nested set: empty collection");
  }
  auto const level = children.front().level();
  for (auto const &c : children)
  {
    if (c.level() != level)
    {
      throw DomainError("nested set: children of mixed levels");
    }
  }
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  NestedSet n;
  n.level_    = level + 1;
  n.children_ = std::move(children);
  return n;
}

NestedSet NestedSet::from_set(FiniteSet const &set)
{
  std::vector<NestedSet> leaves;
  leaves.reserve(set.size());
  for (auto m : set.members())
  {
    leaves.push_back(leaf(m));
  }
  return collection(std::move(leaves));
}

std::vector<ElementIndex> NestedSet::elements() const
{
  if (level_ != 1)
  {
    throw DomainError("nested set: elements() requires level 1");
  }
  std::vector<ElementIndex> out;
  out.reserve(children_.size());
  for (auto const &c : children_)
  {
    out.push_back(c.element_);
  }
  return out;
}

std::strong_ordering operator<=>(NestedSet const &a, NestedSet const &b)
{
  if (auto c = a.level_ <=> b.level_; c != 0)
    return c;
  if (a.level_ == 0)
    return a.element_ <=> b.element_;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

namespace {

void collect_leaves(NestedSet const &n, std::vector<ElementIndex> &out)
{
  if (n.level() == 0)
  {
    out.push_back(n.element());
    return;
  }
  for (auto const &c : n.children())
  {
    collect_leaves(c, out);
  }
}

double f_k_unchecked(BaseMetric const &metric, ElementRegistry const &registry, NestedSet const &a,
                     NestedSet const &b)
{
  switch (a.level())
  {
  case 0:
    return metric.with_distance(registry, [&](auto dist) { return dist(a.element(), b.element()); });
  case 1:
    return average_metric_sorted(metric, registry, a.elements(), b.elements());
  default:
    return average_metric_of<NestedSet>(a.children(), b.children(),
                                        [&](NestedSet const &x, NestedSet const &y) {
                                          return f_k_unchecked(metric, registry, x, y);
                                        });
  }
}

}  // namespace

double f_k(BaseMetric const &metric, ElementRegistry const &registry, NestedSet const &a,
           NestedSet const &b, std::size_t max_level)
{
  if (a.level() != b.level())
  {
    throw DomainError("f_k: level mismatch (" + std::to_string(a.level()) + " vs " +
                      std::to_string(b.level()) + ")");
  }
  if (a.level() > max_level)
  {
    throw DomainError("f_k: level " + std::to_string(a.level()) + " exceeds the depth limit " +
                      std::to_string(max_level));
  }
  std::vector<ElementIndex> leaves;
  collect_leaves(a, leaves);
  collect_leaves(b, leaves);
  for (auto leaf : leaves)
  {
    if (leaf >= registry.size())
    {
      throw DomainError("f_k: leaf outside the registry");
    }
  }
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  metric.validate(registry, leaves);
  return f_k_unchecked(metric, registry, a, b);
}

NestedSet containing_collection(ElementIndex a, FiniteSet const &ground)
{
  if (!ground.contains(a))
  {
    throw DomainError("containing_collection: element not in the ground set");
  }
  if (ground.size() > kMaxContainingGround)
  {
    throw DomainError("containing_collection: ground set larger than " +
                      std::to_string(kMaxContainingGround));
  }
  std::vector<ElementIndex> others;
  for (auto m : ground.members())
  {
    if (m != a)
      others.push_back(m);
  }
  std::vector<NestedSet> subsets;
  std::uint64_t const    count = std::uint64_t{1} << others.size();
  subsets.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask)
  {
    std::vector<NestedSet> leaves{NestedSet::leaf(a)};
    for (std::size_t bitpos = 0; bitpos < others.size(); ++bitpos)
    {
      if (mask & (std::uint64_t{1} << bitpos))
        leaves.push_back(NestedSet::leaf(others[bitpos]));
    }
    subsets.push_back(NestedSet::collection(std::move(leaves)));
  }
  return NestedSet::collection(std::move(subsets));
}

std::size_t containing_symdiff(ElementIndex a, ElementIndex b, FiniteSet const &ground)
{
  auto const ca = containing_collection(a, ground);
  auto const cb = containing_collection(b, ground);
  std::vector<NestedSet> out;
  std::set_symmetric_difference(ca.children().begin(), ca.children().end(), cb.children().begin(),
                                cb.children().end(), std::back_inserter(out));
  return out.size();
}

DualityResult duality_kappa(FiniteSet const &ground, double lambda, double tolerance)
{
  if (ground.size() < 2 || ground.size() > kMaxDualityGround)
  {
    throw DomainError("duality_kappa: ground set size must be in [2, " +
                      std::to_string(kMaxDualityGround) + "]");
  }
  auto const metric = BaseMetric::discrete(lambda);
  auto const &reg   = *ground.registry();
  auto const members = ground.members();

  std::vector<NestedSet> collections;
  collections.reserve(members.size());
  for (auto m : members)
  {
    collections.push_back(containing_collection(m, ground));
  }

  DualityResult out;
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y)
      out.pairs.push_back({members[x], members[y], 0.0, 0.0});

  auto const n_pairs = static_cast<std::ptrdiff_t>(out.pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n_pairs; ++i)
  {
    auto &pair = out.pairs[static_cast<std::size_t>(i)];
    auto  ia   = static_cast<std::size_t>(std::find(members.begin(), members.end(), pair.a) - members.begin());
    auto  ib   = static_cast<std::size_t>(std::find(members.begin(), members.end(), pair.b) - members.begin());
    pair.f2    = f_k_unchecked(metric, reg, collections[ia], collections[ib]);
    pair.ratio = pair.f2 / lambda;
  }

  out.kappa = out.pairs.front().ratio;
  for (auto const &p : out.pairs)
  {
    out.spread = std::max(out.spread, std::abs(p.ratio - out.kappa));
  }
  out.constant         = out.spread <= tolerance;
  out.in_unit_interval = out.kappa > 0.0 && out.kappa < 1.0;
  return out;
}

}  // namespace setmetric
