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

#include "setmetric/continuous.hpp"
#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"
#include "setmetric/samplers.hpp"
#include "support.hpp"

using namespace setmetric;

namespace {

oracle::Parts parts(IntervalUnion const &u)
{
  oracle::Parts out;
  for (auto const &p : u.parts())
    out.emplace_back(p.lo, p.hi);
  return out;
}

IntervalUnion random_union(Rng &rng)
{
  std::vector<Interval> iv;
  std::size_t const     n = 1 + rng() % 3;
  for (std::size_t i = 0; i < n; ++i)
    iv.push_back(samplers::random_interval(rng));
  return IntervalUnion(iv);
}

}  // namespace

TEST(IntervalUnion, MergesAndMeasures)
{
  IntervalUnion u{{0, 1}, {0.5, 2}, {3, 4}, {5, 5}};
  ASSERT_EQ(u.parts().size(), 2u);
  EXPECT_DOUBLE_EQ(u.measure(), 3.0);
  EXPECT_DOUBLE_EQ(u.lo(), 0.0);
  EXPECT_DOUBLE_EQ(u.hi(), 4.0);
  EXPECT_TRUE(u.contains(3.5));
  EXPECT_FALSE(u.contains(2.5));
  EXPECT_THROW((IntervalUnion{{2, 1}}), DomainError);
  EXPECT_THROW(IntervalUnion{}.lo(), DomainError);
}

TEST(IntervalUnion, AlgebraMatchesPointwiseMembership)
{
  for (std::uint64_t n = 0; n < 200; ++n)
  {
    auto rng = make_stream(23, n);
    auto a   = random_union(rng);
    auto b   = random_union(rng);
    auto segs = oracle::segments(parts(a), parts(b));
    double mu = 0, mi = 0, md = 0, ms = 0, b_out = 0;
    for (auto const &s : segs)
    {
      mu += (s.in_a || s.in_b) ? s.len() : 0.0;
      mi += (s.in_a && s.in_b) ? s.len() : 0.0;
      md += (s.in_a && !s.in_b) ? s.len() : 0.0;
      ms += (s.in_a != s.in_b) ? s.len() : 0.0;
      b_out += (s.in_b && !s.in_a) ? s.len() : 0.0;
    }
    EXPECT_NEAR(unite(a, b).measure(), mu, 1e-12);
    EXPECT_NEAR(intersect(a, b).measure(), mi, 1e-12);
    EXPECT_NEAR(subtract(a, b).measure(), md, 1e-12);
    EXPECT_NEAR(symmetric_difference(a, b).measure(), ms, 1e-12);
    EXPECT_TRUE(covers(unite(a, b), a));
    EXPECT_EQ(covers(a, b), b_out == 0.0);
  }
}

TEST(Continuous, BoxIntegralMatchesOracle)
{
  for (std::uint64_t n = 0; n < 300; ++n)
  {
    auto rng = make_stream(29, n);
    auto p   = samplers::interval_pair_case(rng, n);
    auto segs = oracle::segments({{p[0].lo, p[0].hi}}, {{p[1].lo, p[1].hi}});
    auto in_a = [](oracle::Seg const &s) { return s.in_a; };
    auto in_b = [](oracle::Seg const &s) { return s.in_b; };
    EXPECT_NEAR(box_abs_integral(p[0], p[1]), oracle::seg_s(segs, in_a, in_b), 1e-10);
  }
  EXPECT_NEAR(box_abs_integral({0, 1}, {0, 1}), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(box_abs_integral({0, 1}, {2, 3}), 2.0, 1e-15);
}

TEST(Continuous, FMatchesOracleOnUnions)
{
  for (std::uint64_t n = 0; n < 300; ++n)
  {
    auto rng = make_stream(31, n);
    auto a   = random_union(rng);
    auto b   = random_union(rng);
    EXPECT_NEAR(f_continuous(a, b), oracle::interval_f(parts(a), parts(b)), 1e-10);
    EXPECT_NEAR(steinhaus(a, b), oracle::steinhaus(parts(a), parts(b)), 1e-12);
    EXPECT_NEAR(f_continuous(a, b, LineDistance::Discrete), steinhaus(a, b), 1e-12);
  }
}

TEST(Continuous, ClosedFormMatchesOracle)
{
  for (std::uint64_t n = 0; n < 1000; ++n)
  {
    auto rng = make_stream(37, n);
    auto p   = samplers::interval_pair_case(rng, n);
    double const want = oracle::interval_f({{p[0].lo, p[0].hi}}, {{p[1].lo, p[1].hi}});
    EXPECT_NEAR(interval_f_closed(p[0], p[1]), want, 1e-10) << "case " << n % 5;
  }
  EXPECT_EQ(interval_f_closed({0, 1}, {2, 3}), 2.0);
  EXPECT_EQ(interval_f_closed({0, 1}, {0, 1}), 0.0);
  EXPECT_EQ(interval_f_closed({0, 1}, {0.5, 1.5}), 0.5);
  // Shared left endpoint: not proper containment, still the center distance.
  EXPECT_EQ(interval_f_closed({0, 2}, {0, 1}), 0.5);
  EXPECT_THROW(interval_f_closed({1, 1}, {0, 1}), DomainError);
}

TEST(Continuous, GroupAverageOnSelfIsNonZero)
{
  EXPECT_NEAR(g_continuous(IntervalUnion{{0, 1}}, IntervalUnion{{0, 1}}), 1.0 / 3.0, 1e-15);
  EXPECT_THROW(g_continuous(IntervalUnion{}, IntervalUnion{{0, 1}}), DomainError);
}

TEST(Sampling, DrawIsSeededSortedAndInside)
{
  IntervalUnion pop{{0, 1}, {2, 3}};
  SamplePlan    plan{pop, 500, 4, SamplingMode::Random};
  auto const    s1 = draw_sample(plan);
  auto const    s2 = draw_sample(plan);
  EXPECT_EQ(s1, s2);
  EXPECT_TRUE(std::is_sorted(s1.begin(), s1.end()));
  for (double x : s1)
    EXPECT_TRUE(pop.contains(x));
  plan.seed = 5;
  EXPECT_NE(draw_sample(plan), s1);
  plan.mode = SamplingMode::Systematic;
  auto const sys = draw_sample(plan);
  EXPECT_EQ(sys.size(), 500u);
  EXPECT_NEAR(sys.front(), 0.002, 1e-12);
  plan.n = 0;
  EXPECT_THROW(draw_sample(plan), InvalidParameter);
}

TEST(Sampling, EstimateConvergesToClosedForm)
{
  IntervalUnion const a{{0, 1}};
  IntervalUnion const b{{0.5, 1.5}};
  IntervalUnion const pop{{0, 1.5}};
  for (auto mode : {SamplingMode::Random, SamplingMode::Systematic})
  {
    auto e = estimate_f(a, b, SamplePlan{pop, 10000, 0, mode});
    EXPECT_NEAR(e.value, 0.5, 0.025);
    EXPECT_GT(e.size_a, 0u);
    EXPECT_EQ(e.sample_size, 10000u);
  }
  EXPECT_NEAR(rho_ratio(a, b, SamplePlan{pop, 10000, 0, SamplingMode::Systematic}), 1.0, 1e-3);
}

TEST(Sampling, PreconditionErrors)
{
  IntervalUnion const a{{0, 1}};
  IntervalUnion const b{{0.5, 1.5}};
  EXPECT_THROW(estimate_f(a, b, SamplePlan{IntervalUnion{{0, 1.2}}, 100, 0}), DomainError);
  // One point cannot land in both halves of a split population.
  IntervalUnion const far{{10, 11}};
  EXPECT_THROW(estimate_f(a, far, SamplePlan{IntervalUnion{{0, 1}, {10, 11}}, 1, 0}), DomainError);
}

TEST(Sampling, FiniteEstimate)
{
  auto const m   = BaseMetric::euclidean();
  auto       rng = make_stream(43, 0);
  auto       reg = samplers::random_points(rng, 30, 2);
  std::vector<ElementIndex> all(30);
  for (ElementIndex i = 0; i < 30; ++i)
    all[i] = i;
  FiniteSet const pop(reg, all);
  FiniteSet const a(reg, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  FiniteSet const b(reg, {8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20});
  // Stride 1 over the whole population is the population itself.
  auto const e = estimate_f(m, a, b, FiniteSamplePlan{pop, 30, 0, SamplingMode::Systematic});
  EXPECT_NEAR(e.value, average_metric(m, a, b), 1e-12);
  EXPECT_EQ(e.size_a, 12u);
  auto const r1 = estimate_f(m, a, b, FiniteSamplePlan{pop, 40, 3, SamplingMode::Random});
  auto const r2 = estimate_f(m, a, b, FiniteSamplePlan{pop, 40, 3, SamplingMode::Random});
  EXPECT_EQ(r1.value, r2.value);
}

TEST(Fuzzy, CutsAndValidation)
{
  auto     reg = samplers::tokens(4);
  FuzzySet a(reg, {{0, 1.0}, {1, 0.5}, {2, 0.0}});
  EXPECT_EQ(a.cut(0.3).size(), 2u);
  EXPECT_EQ(a.cut(0.7).size(), 1u);
  EXPECT_EQ(a.cut(1e-9).size(), 2u);
  EXPECT_THROW(FuzzySet(reg, {{0, 1.5}}), DomainError);
  EXPECT_THROW(FuzzySet(reg, {{0, 0.0}}), DomainError);
  EXPECT_THROW(FuzzySet(reg, {{0, 0.5}, {0, 0.2}}), DomainError);
  EXPECT_EQ(default_alpha_grid().size(), 10u);
}

TEST(Fuzzy, DistanceMatchesLevelSetOracle)
{
  auto const m = BaseMetric::euclidean();
  auto const grid = default_alpha_grid();
  for (std::uint64_t n = 0; n < 60; ++n)
  {
    auto rng = make_stream(47, n);
    auto reg = samplers::random_points(rng, 8, 2);
    auto A   = samplers::random_fuzzy(rng, reg);
    auto B   = samplers::random_fuzzy(rng, reg);
    double const c = 0.5 * double(n % 3);

    using Level = std::pair<std::vector<oracle::Pt>, double>;
    // Keep only levels where both cuts are non-empty.
    std::vector<Level> ka, kb;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
      auto ca = A.cut(grid[i]);
      auto cb = B.cut(grid[i]);
      if (!ca.empty() && !cb.empty())
      {
        ka.push_back({testing_support::points(ca), grid[i]});
        kb.push_back({testing_support::points(cb), grid[i]});
      }
    }
    auto d = [&](Level const &x, Level const &y) {
      return oracle::f(x.first, y.first, oracle::euclid) + c * std::abs(x.second - y.second);
    };
    EXPECT_NEAR(fuzzy_distance(m, A, B, grid, c), oracle::f(ka, kb, d), 1e-12);
    EXPECT_NEAR(fuzzy_distance(m, A, A, grid, c), 0.0, 1e-15);
  }
}
