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

#include "setmetric/core_metrics.hpp"

#include <string>

#include "setmetric/kernels.hpp"

namespace setmetric {

namespace {

void require_nonempty(FiniteSet const &s, char const *op)
{
  if (s.empty())
  {
    throw DomainError(std::string(op) + ": empty input set");
  }
}

void require_pair(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b, char const *op)
{
  require_nonempty(a, op);
  require_nonempty(b, op);
  require_same_registry(a, b);
  metric.validate(*a.registry(), a.members());
  metric.validate(*a.registry(), b.members());
  // Vector kinds need one dimension across both operands.
  if (!a.empty() && !b.empty())
  {
    ElementIndex const probe[2] = {a.members().front(), b.members().front()};
    metric.validate(*a.registry(), probe);
  }
}

// s(A, B) with no checks beyond registry agreement; either side may be empty.
double raw_sum(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  if (a.empty() || b.empty())
  {
    return 0.0;
  }
  return kernels::pair_sum(metric, *a.registry(), a.members(), b.members());
}

double raw_t(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b, FiniteSet const &c)
{
  return static_cast<double>(c.size()) * raw_sum(metric, a, b) +
         static_cast<double>(a.size()) * raw_sum(metric, b, c) -
         static_cast<double>(b.size()) * raw_sum(metric, a, c);
}

}  // namespace

double point_to_set(BaseMetric const &metric, ElementIndex x, FiniteSet const &set)
{
  require_nonempty(set, "point_to_set");
  if (x >= set.registry()->size())
  {
    throw DomainError("point_to_set: element outside the set's registry");
  }
  ElementIndex const single[1] = {x};
  metric.validate(*set.registry(), single);
  metric.validate(*set.registry(), set.members());
  ElementIndex const probe[2] = {x, set.members().front()};
  metric.validate(*set.registry(), probe);
  return kernels::min_cross(metric, *set.registry(), single, set.members());
}

double set_to_set_inf(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  require_pair(metric, a, b, "set_to_set_inf");
  return kernels::min_cross(metric, *a.registry(), a.members(), b.members());
}

double pair_sum(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  if (a.empty() || b.empty())
  {
    return 0.0;
  }
  require_pair(metric, a, b, "pair_sum");
  return raw_sum(metric, a, b);
}

double triple_t(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                FiniteSet const &c)
{
  require_pair(metric, a, b, "triple_t");
  require_pair(metric, b, c, "triple_t");
  return raw_t(metric, a, b, c);
}

double group_average(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  require_pair(metric, a, b, "group_average");
  return raw_sum(metric, a, b) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double average_metric_sorted(BaseMetric const &metric, ElementRegistry const &registry,
                             std::span<const ElementIndex> a, std::span<const ElementIndex> b)
{
  std::vector<ElementIndex> b_minus_a;
  std::vector<ElementIndex> a_minus_b;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_minus_a));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(a_minus_b));
  if (a_minus_b.empty() && b_minus_a.empty())
  {
    return 0.0;
  }
  auto const uni = static_cast<double>(a.size() + b_minus_a.size());
  double     out = 0.0;
  if (!b_minus_a.empty())
  {
    out += kernels::pair_sum(metric, registry, a, b_minus_a) / (uni * static_cast<double>(a.size()));
  }
  if (!a_minus_b.empty())
  {
    out += kernels::pair_sum(metric, registry, a_minus_b, b) / (uni * static_cast<double>(b.size()));
  }
  return out;
}

double average_metric(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  require_pair(metric, a, b, "average_metric");
  return average_metric_sorted(metric, *a.registry(), a.members(), b.members());
}

double semi_metric(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  require_pair(metric, a, b, "semi_metric");
  // s(A,B) - s(AnB, AnB) split into the three cross blocks that remain.
  auto const common    = set_intersection(a, b);
  auto const a_minus_b = set_difference(a, b);
  auto const b_minus_a = set_difference(b, a);
  double const kept = raw_sum(metric, a_minus_b, b_minus_a) + raw_sum(metric, common, b_minus_a) +
                      raw_sum(metric, a_minus_b, common);
  return kept / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double hausdorff(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  require_pair(metric, a, b, "hausdorff");
  auto const &reg = *a.registry();
  return std::max(kernels::directed_hausdorff(metric, reg, a.members(), b.members()),
                  kernels::directed_hausdorff(metric, reg, b.members(), a.members()));
}

double jaccard(FiniteSet const &a, FiniteSet const &b)
{
  if (a.empty() && b.empty())
  {
    throw DomainError("jaccard: both sets are empty");
  }
  if (a.empty() || b.empty())
  {
    return 1.0;
  }
  require_same_registry(a, b);
  auto const sym = set_symmetric_difference(a, b).size();
  auto const uni = set_union(a, b).size();
  return static_cast<double>(sym) / static_cast<double>(uni);
}

std::size_t symdiff_cardinality(FiniteSet const &a, FiniteSet const &b)
{
  if (a.empty())
  {
    return b.size();
  }
  if (b.empty())
  {
    return a.size();
  }
  return set_symmetric_difference(a, b).size();
}

TriangleGapDecomposition decompose_triangle_gap(BaseMetric const &metric, FiniteSet const &A,
                                                FiniteSet const &B, FiniteSet const &C)
{
  require_pair(metric, A, B, "decompose_triangle_gap");
  require_pair(metric, B, C, "decompose_triangle_gap");

  auto U = [](FiniteSet const &x, FiniteSet const &y) { return set_union(x, y); };
  auto I = [](FiniteSet const &x, FiniteSet const &y) { return set_intersection(x, y); };
  auto D = [](FiniteSet const &x, FiniteSet const &y) { return set_difference(x, y); };
  auto n = [](FiniteSet const &x) { return static_cast<double>(x.size()); };
  auto s = [&](FiniteSet const &x, FiniteSet const &y) { return raw_sum(metric, x, y); };
  auto t = [&](FiniteSet const &x, FiniteSet const &y, FiniteSet const &z) {
    return raw_t(metric, x, y, z);
  };

  auto const AuB = U(A, B);
  auto const BuC = U(B, C);
  auto const AuC = U(A, C);

  auto const alpha = D(A, BuC);
  auto const beta  = D(B, AuC);
  auto const gamma = D(C, AuB);
  auto const delta = D(I(A, B), C);
  auto const eps   = D(I(B, C), A);
  auto const zeta  = D(I(C, A), B);
  auto const theta = I(B, AuC);

  TriangleGapDecomposition out;
  out.scaled_gap = n(A) * n(B) * n(C) * n(AuB) * n(BuC) * n(AuC) *
                   (average_metric(metric, A, B) + average_metric(metric, B, C) -
                    average_metric(metric, A, C));

  auto const deltaC = U(delta, C);
  auto const Aeps   = U(A, eps);
  auto const Bzeta  = U(B, zeta);

  double sum = 0.0;
  sum += n(B) * n(C) *
         (n(deltaC) * t(A, D(B, A), gamma) + n(alpha) * t(A, beta, gamma) +
          n(Bzeta) * t(A, beta, D(C, A)));
  sum += n(A) * n(B) *
         (n(Aeps) * t(alpha, D(B, C), C) + n(gamma) * t(alpha, beta, C) +
          n(Bzeta) * t(D(A, C), beta, C));
  sum += n(A) * n(C) * ((n(AuC) + n(zeta)) * t(alpha, B, gamma) + n(B) * t(alpha, theta, gamma));
  sum += n(A) * n(C) * (n(Aeps) * t(alpha, B, zeta) + n(deltaC) * t(zeta, B, gamma));
  sum += 2.0 * n(A) * n(C) * (n(deltaC) * n(Aeps) + n(beta) * n(AuC)) * s(B, zeta);
  sum += 2.0 * n(A) * n(B) * n(C) * n(Bzeta) * s(beta, I(A, C));
  out.term_sum = sum;
  return out;
}

}  // namespace setmetric
