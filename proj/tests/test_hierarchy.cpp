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

#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"
#include "setmetric/hierarchy.hpp"
#include "setmetric/samplers.hpp"
#include "support.hpp"

using namespace setmetric;
using testing_support::unit_discrete;

namespace {

oracle::Node to_node(NestedSet const &n)
{
  if (n.level() == 0)
    return {static_cast<int>(n.element()), {}};
  oracle::Node out;
  for (auto const &c : n.children())
    out.kids.push_back(to_node(c));
  return out;
}

// C(a) over {0, ..., n-1}, enumerated by bitmask.
oracle::Node containing(int a, int n)
{
  oracle::Node out;
  for (int mask = 1; mask < (1 << n); ++mask)
  {
    if (!(mask & (1 << a)))
      continue;
    oracle::Node subset;
    for (int x = 0; x < n; ++x)
      if (mask & (1 << x))
        subset.kids.push_back({x, {}});
    out.kids.push_back(subset);
  }
  return out;
}

}  // namespace

TEST(NestedSet, CanonicalForm)
{
  auto a = NestedSet::collection({NestedSet::leaf(2), NestedSet::leaf(0), NestedSet::leaf(2)});
  auto b = NestedSet::collection({NestedSet::leaf(0), NestedSet::leaf(2)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.level(), 1u);
  EXPECT_EQ(a.size(), 2u);
  auto c = NestedSet::collection({a, b});
  EXPECT_EQ(c.level(), 2u);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_THROW(NestedSet::collection({}), DomainError);
  EXPECT_THROW(NestedSet::collection({a, NestedSet::leaf(1)}), DomainError);
  EXPECT_THROW(c.elements(), DomainError);
}

TEST(FK, LevelOneIsAverageMetric)
{
  auto const m = BaseMetric::euclidean();
  for (std::uint64_t n = 0; n < 100; ++n)
  {
    auto rng = make_stream(13, n);
    auto tri = samplers::point_set_triple(rng);
    auto const &reg = *tri[0].registry();
    EXPECT_EQ(f_k(m, reg, NestedSet::from_set(tri[0]), NestedSet::from_set(tri[1])),
              average_metric(m, tri[0], tri[1]));
    EXPECT_EQ(f_k(m, reg, NestedSet::leaf(0), NestedSet::leaf(1)), base_distance(m, reg, 0, 1));
  }
}

TEST(FK, LevelTwoMatchesOracle)
{
  auto const m = BaseMetric::euclidean();
  for (std::uint64_t n = 0; n < 200; ++n)
  {
    auto rng  = make_stream(17, n);
    auto t    = samplers::nested_triple(rng);
    auto reg  = t.registry;
    auto base = [&](int a, int b) { return base_distance(m, *reg, ElementIndex(a), ElementIndex(b)); };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        EXPECT_NEAR(f_k(m, *reg, t.sets[i], t.sets[j]), oracle::fk(to_node(t.sets[i]), to_node(t.sets[j]), base),
                    1e-12);
  }
}

TEST(FK, LevelThreeMatchesOracle)
{
  auto const m = BaseMetric::euclidean();
  auto rng  = make_stream(19, 0);
  auto t1   = samplers::nested_triple(rng);
  auto reg  = t1.registry;
  auto A    = NestedSet::collection({t1.sets[0], t1.sets[1]});
  auto B    = NestedSet::collection({t1.sets[1], t1.sets[2]});
  auto base = [&](int a, int b) { return base_distance(m, *reg, ElementIndex(a), ElementIndex(b)); };
  EXPECT_NEAR(f_k(m, *reg, A, B), oracle::fk(to_node(A), to_node(B), base), 1e-12);
  EXPECT_THROW(f_k(m, *reg, A, B, 2), DomainError);
  EXPECT_THROW(f_k(m, *reg, A, t1.sets[0]), DomainError);
}

TEST(Duality, ContainingCollections)
{
  auto      reg = samplers::tokens(4);
  FiniteSet ground(reg, {0, 1, 2, 3});
  auto      c = containing_collection(1, ground);
  EXPECT_EQ(c.level(), 2u);
  EXPECT_EQ(c.size(), 8u);
  // |C(a) sym C(b)| = 2 * 2^{n-2} for a != b.
  EXPECT_EQ(containing_symdiff(0, 1, ground), 8u);
  EXPECT_EQ(containing_symdiff(2, 2, ground), 0u);
}

TEST(Duality, KappaOfTwoElementsIsOneHalf)
{
  auto      reg = samplers::tokens(2);
  FiniteSet ground(reg, {0, 1});
  auto const r = duality_kappa(ground, 1.0);
  EXPECT_EQ(r.kappa, 0.5);
  EXPECT_TRUE(r.constant);
  ASSERT_EQ(r.pairs.size(), 1u);
  // By hand: C(a) = {{a}, {a, b}}, C(b) = {{b}, {a, b}}; f_2 = 1/4 + 1/4.
  EXPECT_EQ(r.pairs[0].f2, 0.5);
}

TEST(Duality, KappaMatchesOracleEnumeration)
{
  for (int n = 2; n <= 5; ++n)
  {
    auto reg = samplers::tokens(std::size_t(n));
    std::vector<ElementIndex> all;
    for (int i = 0; i < n; ++i)
      all.push_back(ElementIndex(i));
    auto const r = duality_kappa(FiniteSet(reg, all), 1.0);
    EXPECT_TRUE(r.constant);
    EXPECT_TRUE(r.in_unit_interval);
    for (auto const &p : r.pairs)
    {
      double const f2   = oracle::fk(containing(int(p.a), n), containing(int(p.b), n), unit_discrete);
      double const symd = double(1 << (n - 1));
      EXPECT_NEAR(p.f2, f2, 1e-12);
      EXPECT_NEAR(p.ratio, f2, 1e-12);  // discrete d(a, b) = 1
      EXPECT_NEAR(double(containing_symdiff(p.a, p.b, FiniteSet(reg, all))), symd, 0.0);
    }
  }
}

TEST(Duality, GroundSizeLimits)
{
  auto reg = samplers::tokens(1);
  EXPECT_THROW(duality_kappa(FiniteSet(reg, {0}), 1.0), DomainError);
}
