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

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include "setmetric/base_metric.hpp"
#include "setmetric/error.hpp"
#include "setmetric/registry.hpp"

namespace setmetric {

/// dist(x, A) = min_{a in A} d(x, a).
double point_to_set(BaseMetric const &metric, ElementIndex x, FiniteSet const &set);

/// min over all cross pairs (single-linkage distance).
double set_to_set_inf(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b);

/// s(A, B): sum of all cross distances. Empty operands give 0.
double pair_sum(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b);

/// t(A, B, C) = |C| s(A,B) + |A| s(B,C) - |B| s(A,C). Not clamped, so a
/// negative value exposes a base distance that breaks the triangle inequality.
double triple_t(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                FiniteSet const &c);

/// g(A, B) = s(A, B) / (|A| |B|). Satisfies M1, M4, M5 but g(A, A) > 0 in general.
double group_average(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b);

/// The average-distance metric
///
///   f(A, B) = s(A, B\A) / (|A u B| |A|) + s(A\B, B) / (|A u B| |B|),
///
/// a metric on non-empty finite sets whenever d is a metric. Set algebra is by
/// element identity, so f(A, B) = 0 iff A == B even under a pseudo-metric d.
double average_metric(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b);

/// average_metric on raw sorted, deduplicated, non-empty index ranges that
/// have already been validated against `metric`.
double average_metric_sorted(BaseMetric const &metric, ElementRegistry const &registry,
                             std::span<const ElementIndex> a, std::span<const ElementIndex> b);

/// e(A, B) = (s(A, B) - s(A n B, A n B)) / (|A| |B|). A semi-metric: M1-M4 hold,
/// the triangle inequality does not in general.
double semi_metric(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b);

double hausdorff(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b);

/// |A sym B| / |A u B|. Throws DomainError when both sets are empty.
double jaccard(FiniteSet const &a, FiniteSet const &b);

std::size_t symdiff_cardinality(FiniteSet const &a, FiniteSet const &b);

/// Both sides of the triangle-gap identity for f. `scaled_gap` is
/// |A||B||C||AuB||BuC||AuC| (f(A,B) + f(B,C) - f(A,C)); `term_sum` is the same
/// quantity rebuilt as a non-negative combination of t- and s-terms over the
/// seven-part split alpha..eta of A u B u C.
struct TriangleGapDecomposition
{
  double scaled_gap = 0.0;
  double term_sum   = 0.0;
};

TriangleGapDecomposition decompose_triangle_gap(BaseMetric const &metric, FiniteSet const &a,
                                                FiniteSet const &b, FiniteSet const &c);

// Generic forms over any strictly ordered element type. Inputs are sorted and
// deduplicated ranges; `dist` is the ground distance on T. These back the
// nested and fuzzy constructions, where the elements are themselves sets.

template <typename T, typename Dist>
double pair_sum_of(std::span<const T> a, std::span<const T> b, Dist &&dist)
{
  double total = 0.0;
  for (auto const &x : a)
  {
    for (auto const &y : b)
    {
      total += dist(x, y);
    }
  }
  return total;
}

template <typename T, typename Dist>
double average_metric_of(std::span<const T> a, std::span<const T> b, Dist &&dist)
{
  if (a.empty() || b.empty())
  {
    throw DomainError("average metric of an empty collection");
  }
  std::vector<T> b_minus_a;
  std::vector<T> a_minus_b;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_minus_a));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(a_minus_b));
  if (a_minus_b.empty() && b_minus_a.empty())
  {
    return 0.0;
  }
  auto const union_size = static_cast<double>(a.size() + b_minus_a.size());
  double const first  = pair_sum_of<T>(a, b_minus_a, dist) / (union_size * static_cast<double>(a.size()));
  double const second = pair_sum_of<T>(a_minus_b, b, dist) / (union_size * static_cast<double>(b.size()));
  return first + second;
}

}  // namespace setmetric
