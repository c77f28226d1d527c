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

#include "setmetric/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace setmetric::samplers {

namespace {

std::size_t uniform_index(Rng &rng, std::size_t lo, std::size_t hi)
{
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double unit(Rng &rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

RegistryPtr random_points(Rng &rng, std::size_t n, std::size_t dim)
{
  auto reg = std::make_shared<ElementRegistry>();
  std::vector<double> payload(dim);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (auto &x : payload)
      x = unit(rng);
    reg->add("p" + std::to_string(i), payload);
  }
  return reg;
}

RegistryPtr tokens(std::size_t n)
{
  auto reg = std::make_shared<ElementRegistry>();
  for (std::size_t i = 0; i < n; ++i)
  {
    reg->add("e" + std::to_string(i));
  }
  return reg;
}

FiniteSet random_subset(Rng &rng, RegistryPtr const &registry, std::size_t min_size,
                        std::size_t max_size)
{
  auto const n = registry->size();
  max_size     = std::min(max_size, n);
  min_size     = std::min(min_size, max_size);
  std::vector<ElementIndex> all(n);
  std::iota(all.begin(), all.end(), ElementIndex{0});
  auto const k = uniform_index(rng, min_size, max_size);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i)
  {
    std::swap(all[i], all[uniform_index(rng, i, n - 1)]);
  }
  all.resize(k);
  return {registry, std::move(all)};
}

FiniteSet bernoulli_subset(Rng &rng, RegistryPtr const &registry)
{
  for (;;)
  {
    std::vector<ElementIndex> members;
    for (ElementIndex i = 0; i < registry->size(); ++i)
    {
      if (rng() & 1u)
        members.push_back(i);
    }
    if (!members.empty())
      return {registry, std::move(members)};
  }
}

std::array<FiniteSet, 3> point_set_triple(Rng &rng, SetShape const &shape)
{
  auto const reg = random_points(rng, shape.pool, shape.dim);
  return subset_triple(rng, reg, shape.min_size, shape.max_size);
}

std::array<FiniteSet, 3> subset_triple(Rng &rng, RegistryPtr const &registry, std::size_t min_size,
                                       std::size_t max_size)
{
  auto a = random_subset(rng, registry, min_size, max_size);
  auto b = random_subset(rng, registry, min_size, max_size);
  auto c = random_subset(rng, registry, min_size, max_size);
  return {std::move(a), std::move(b), std::move(c)};
}

SemiMetricCounterexample semi_metric_counterexample(Rng &rng, std::size_t dim)
{
  auto const nd  = uniform_index(rng, 1, 3);
  auto const ne  = uniform_index(rng, 1, 3);
  auto const nh  = uniform_index(rng, 1, 3);
  auto const reg = random_points(rng, nd + ne + nh, dim);
  auto range = [&](std::size_t from, std::size_t count) {
    std::vector<ElementIndex> m(count);
    std::iota(m.begin(), m.end(), static_cast<ElementIndex>(from));
    return FiniteSet(reg, std::move(m));
  };
  SemiMetricCounterexample out;
  out.delta = range(0, nd);
  out.eps   = range(nd, ne);
  out.eta   = range(nd + ne, nh);
  out.a     = set_union(out.delta, out.eta);
  out.b     = set_union(out.a, out.eps);
  out.c     = set_union(out.eta, out.eps);
  return out;
}

Interval random_interval(Rng &rng)
{
  double const x = -5.0 + 10.0 * unit(rng);
  double const y = -5.0 + 10.0 * unit(rng);
  if (x == y)
    return {x, x + 1.0};
  return {std::min(x, y), std::max(x, y)};
}

std::array<Interval, 3> interval_triple(Rng &rng)
{
  auto a = interval_pair_case(rng, uniform_index(rng, 0, 4));
  auto b = interval_pair_case(rng, uniform_index(rng, 0, 4));
  // Chain the cases through a shared middle so triangles mix configurations.
  return {a[0], a[1], (rng() & 1u) ? b[0] : b[1]};
}

std::array<Interval, 2> interval_pair_case(Rng &rng, std::size_t case_index)
{
  auto const a = random_interval(rng);
  double const len = a.length();
  switch (case_index % 5)
  {
  case 0:  // proper nesting
  {
    double const lo = a.lo + len * 0.5 * unit(rng);
    double const hi = lo + (a.hi - lo) * (0.05 + 0.9 * unit(rng));
    return {a, Interval{lo, hi}};
  }
  case 1:  // partial overlap
  {
    double const lo = a.lo + len * (0.05 + 0.9 * unit(rng));
    return {a, Interval{lo, a.hi + 0.05 + 3.0 * unit(rng)}};
  }
  case 2:  // disjoint
  {
    double const lo = a.hi + 0.05 + 3.0 * unit(rng);
    return {a, Interval{lo, lo + 0.05 + 3.0 * unit(rng)}};
  }
  case 3:  // shared endpoint: nested from one side, or touching
  {
    switch (uniform_index(rng, 0, 2))
    {
    case 0:
      return {a, Interval{a.lo, a.lo + len * (0.05 + 0.9 * unit(rng))}};
    case 1:
      return {a, Interval{a.hi - len * (0.05 + 0.9 * unit(rng)), a.hi}};
    default:
      return {a, Interval{a.hi, a.hi + 0.05 + 3.0 * unit(rng)}};
    }
  }
  default:  // independent
    return {a, random_interval(rng)};
  }
}

NestedTriple nested_triple(Rng &rng)
{
  NestedTriple out;
  out.registry = random_points(rng, 6, 2);
  std::vector<NestedSet> inner_pool;
  for (int i = 0; i < 6; ++i)
  {
    inner_pool.push_back(NestedSet::from_set(random_subset(rng, out.registry, 1, 4)));
  }
  for (auto &s : out.sets)
  {
    auto const k = uniform_index(rng, 1, 4);
    std::vector<NestedSet> picked;
    for (std::size_t i = 0; i < k; ++i)
    {
      picked.push_back(inner_pool[uniform_index(rng, 0, inner_pool.size() - 1)]);
    }
    s = NestedSet::collection(std::move(picked));
  }
  return out;
}

FuzzySet random_fuzzy(Rng &rng, RegistryPtr const &registry)
{
  std::vector<std::pair<ElementIndex, double>> grades;
  for (ElementIndex i = 0; i < registry->size(); ++i)
  {
    // Grades on a tenth grid so alpha cuts coincide often.
    grades.emplace_back(i, static_cast<double>(uniform_index(rng, 0, 10)) / 10.0);
  }
  grades[uniform_index(rng, 0, grades.size() - 1)].second = 1.0;
  return {registry, std::move(grades)};
}

}  // namespace setmetric::samplers
