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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"
#include "setmetric/samplers.hpp"
#include "support.hpp"

using namespace setmetric;
using testing_support::indices;
using testing_support::points;

namespace {

RegistryPtr line(std::initializer_list<double> xs)
{
  auto reg = std::make_shared<ElementRegistry>();
  int  n   = 0;
  for (double x : xs)
    reg->add("x" + std::to_string(n++), {x});
  return reg;
}

}  // namespace

TEST(Registry, RejectsDuplicateAndUnknownIds)
{
  ElementRegistry reg;
  reg.add("a");
  EXPECT_THROW(reg.add("a"), DomainError);
  EXPECT_THROW(reg.index_of("b"), DomainError);
  EXPECT_TRUE(reg.contains("a"));
}

TEST(FiniteSet, SortsAndDeduplicates)
{
  auto reg = samplers::tokens(5);
  FiniteSet s(reg, {3, 1, 3, 0});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.members()[0], 0u);
  EXPECT_EQ(s.members()[2], 3u);
  EXPECT_THROW(FiniteSet(reg, {7}), DomainError);
}

TEST(FiniteSet, AlgebraMatchesBruteForce)
{
  auto reg = samplers::tokens(10);
  for (std::uint64_t n = 0; n < 50; ++n)
  {
    auto rng = make_stream(11, n);
    auto a   = samplers::bernoulli_subset(rng, reg);
    auto b   = samplers::bernoulli_subset(rng, reg);
    auto ia  = indices(a);
    auto ib  = indices(b);
    EXPECT_EQ(set_union(a, b).size(), oracle::unite(ia, ib).size());
    EXPECT_EQ(set_intersection(a, b).size(), oracle::inter(ia, ib).size());
    EXPECT_EQ(set_difference(a, b).size(), oracle::minus(ia, ib).size());
    EXPECT_EQ(symdiff_cardinality(a, b), oracle::minus(ia, ib).size() + oracle::minus(ib, ia).size());
  }
}

TEST(FiniteSet, DifferentRegistriesDoNotMix)
{
  FiniteSet a(samplers::tokens(3), {0});
  FiniteSet b(samplers::tokens(3), {0});
  EXPECT_THROW(set_union(a, b), DomainError);
}

TEST(CoreMetrics, EuclideanFamiliesMatchOracle)
{
  auto const m = BaseMetric::euclidean();
  for (std::uint64_t n = 0; n < 200; ++n)
  {
    auto rng = make_stream(21, n);
    auto tri = samplers::point_set_triple(rng);
    auto pa  = points(tri[0]);
    auto pb  = points(tri[1]);
    auto pc  = points(tri[2]);
    EXPECT_NEAR(average_metric(m, tri[0], tri[1]), oracle::f(pa, pb, oracle::euclid), 1e-12);
    EXPECT_NEAR(group_average(m, tri[0], tri[1]), oracle::g(pa, pb, oracle::euclid), 1e-12);
    EXPECT_NEAR(semi_metric(m, tri[0], tri[1]), oracle::e(pa, pb, oracle::euclid), 1e-12);
    EXPECT_NEAR(hausdorff(m, tri[0], tri[1]), oracle::h(pa, pb, oracle::euclid), 1e-12);
    EXPECT_NEAR(pair_sum(m, tri[0], tri[1]), oracle::s(pa, pb, oracle::euclid), 1e-10);
    EXPECT_NEAR(triple_t(m, tri[0], tri[1], tri[2]), oracle::t(pa, pb, pc, oracle::euclid), 1e-9);
    EXPECT_NEAR(jaccard(tri[0], tri[1]), oracle::jaccard(pa, pb), 1e-15);
  }
}

TEST(CoreMetrics, LpAndMatrixBases)
{
  auto reg = std::make_shared<ElementRegistry>();
  reg->add("a", {0.0, 0.0});
  reg->add("b", {3.0, 4.0});
  auto const l1   = BaseMetric::lp(1.0);
  auto const linf = BaseMetric::lp(std::numeric_limits<double>::infinity());
  EXPECT_DOUBLE_EQ(base_distance(l1, *reg, 0, 1), 7.0);
  EXPECT_DOUBLE_EQ(base_distance(linf, *reg, 0, 1), 4.0);
  EXPECT_DOUBLE_EQ(base_distance(BaseMetric::euclidean(), *reg, 0, 1), 5.0);
  EXPECT_THROW(BaseMetric::lp(0.5), InvalidParameter);

  RegistryPtr shared = reg;
  auto const  mm     = BaseMetric::matrix(MatrixMetric(shared, {"a", "b"}, {{0, 2}, {2, 0}}, false));
  EXPECT_DOUBLE_EQ(base_distance(mm, *reg, 0, 1), 2.0);
  EXPECT_THROW(MatrixMetric(shared, {"a", "b"}, {{0, 2}, {3, 0}}, false), DomainError);
  EXPECT_THROW(MatrixMetric(shared, {"a", "b"}, {{0, 0}, {0, 0}}, false), DomainError);
  EXPECT_NO_THROW(MatrixMetric(shared, {"a", "b"}, {{0, 0}, {0, 0}}, true));
}

TEST(CoreMetrics, MatrixTriangleViolationRejected)
{
  auto reg = samplers::tokens(3);
  EXPECT_THROW(MatrixMetric(reg, {"e0", "e1", "e2"}, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}, false), DomainError);
}

TEST(CoreMetrics, SmallExamples)
{
  auto const m   = BaseMetric::euclidean();
  auto const reg = line({0.0, 1.0, 2.0, 3.0});
  FiniteSet  a(reg, {0, 1});
  FiniteSet  b(reg, {2, 3});
  // Disjoint sets: f equals g.
  EXPECT_DOUBLE_EQ(average_metric(m, a, b), group_average(m, a, b));
  EXPECT_DOUBLE_EQ(group_average(m, a, b), 2.0);
  // g is not zero on the diagonal.
  EXPECT_DOUBLE_EQ(group_average(m, a, a), 0.5);
  EXPECT_DOUBLE_EQ(average_metric(m, a, a), 0.0);
  EXPECT_DOUBLE_EQ(hausdorff(m, a, b), 2.0);
  EXPECT_DOUBLE_EQ(point_to_set(m, 0, b), 2.0);
  EXPECT_DOUBLE_EQ(set_to_set_inf(m, a, b), 1.0);
}

TEST(CoreMetrics, DiscreteBaseGivesJaccard)
{
  auto const m   = BaseMetric::discrete(1.0);
  auto const reg = samplers::tokens(4);
  auto       a   = FiniteSet::from_ids(reg, {"e1", "e2"});
  auto       b   = FiniteSet::from_ids(reg, {"e2", "e3"});
  EXPECT_NEAR(average_metric(m, a, b), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(average_metric(BaseMetric::discrete(2.5), a, b), 2.5 * 2.0 / 3.0, 1e-15);
}

TEST(CoreMetrics, EmptyOperands)
{
  auto const m   = BaseMetric::euclidean();
  auto const reg = line({0.0, 1.0});
  FiniteSet  a(reg, {0});
  FiniteSet  empty(reg, {});
  EXPECT_THROW(average_metric(m, a, empty), DomainError);
  EXPECT_THROW(hausdorff(m, empty, a), DomainError);
  EXPECT_DOUBLE_EQ(pair_sum(m, a, empty), 0.0);
  EXPECT_THROW(jaccard(empty, empty), DomainError);
  EXPECT_DOUBLE_EQ(jaccard(a, empty), 1.0);
}

TEST(CoreMetrics, DimensionMismatchIsDomainError)
{
  auto reg = std::make_shared<ElementRegistry>();
  reg->add("a", {0.0});
  reg->add("b", {0.0, 1.0});
  RegistryPtr shared = reg;
  FiniteSet   a(shared, {0});
  FiniteSet   b(shared, {1});
  EXPECT_THROW(average_metric(BaseMetric::euclidean(), a, b), DomainError);
}

TEST(CoreMetrics, LemmaTNonNegative)
{
  auto const m = BaseMetric::euclidean();
  for (std::uint64_t n = 0; n < 500; ++n)
  {
    auto rng = make_stream(31, n);
    auto tri = samplers::point_set_triple(rng);
    EXPECT_GE(triple_t(m, tri[0], tri[1], tri[2]), -1e-12);
  }
}

TEST(CoreMetrics, DecompositionMatchesOracleGap)
{
  auto const m = BaseMetric::euclidean();
  for (std::uint64_t n = 0; n < 200; ++n)
  {
    auto rng = make_stream(41, n);
    auto tri = samplers::point_set_triple(rng);
    auto pa  = points(tri[0]);
    auto pb  = points(tri[1]);
    auto pc  = points(tri[2]);
    double const scale = double(pa.size() * pb.size() * pc.size()) *
                         double(oracle::unite(pa, pb).size() * oracle::unite(pb, pc).size() *
                                oracle::unite(pa, pc).size());
    double const gap = scale * (oracle::f(pa, pb, oracle::euclid) + oracle::f(pb, pc, oracle::euclid) -
                                oracle::f(pa, pc, oracle::euclid));
    auto const d = decompose_triangle_gap(m, tri[0], tri[1], tri[2]);
    double const denom = std::max(std::abs(gap), 1e-12);
    EXPECT_LE(std::abs(d.term_sum - gap) / denom, 1e-9);
    EXPECT_LE(std::abs(d.scaled_gap - gap) / denom, 1e-9);
  }
}

TEST(CoreMetrics, SemiMetricCounterexampleViolatesTriangle)
{
  auto const m = BaseMetric::euclidean();
  for (std::uint64_t n = 0; n < 50; ++n)
  {
    auto rng = make_stream(51, n);
    auto cx  = samplers::semi_metric_counterexample(rng);
    auto pa  = points(cx.a);
    auto pb  = points(cx.b);
    auto pc  = points(cx.c);
    double const gap = oracle::e(pa, pb, oracle::euclid) + oracle::e(pb, pc, oracle::euclid) -
                       oracle::e(pa, pc, oracle::euclid);
    EXPECT_LT(gap, 0.0);
    double const predicted = -oracle::t(points(cx.delta), points(cx.eta), points(cx.eps), oracle::euclid) /
                             double(pa.size() * pb.size() * pc.size());
    EXPECT_NEAR(gap, predicted, 1e-12);
  }
}
