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

#include "setmetric/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "setmetric/axioms.hpp"
#include "setmetric/continuous.hpp"
#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"
#include "setmetric/hierarchy.hpp"
#include "setmetric/power_means.hpp"
#include "setmetric/samplers.hpp"

namespace setmetric::verify {

namespace {

constexpr std::array<std::string_view, 5> kSuites{"identities", "appendixA", "appendixB", "duality",
                                                  "interval"};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Stable per-check stream family so adding a check does not perturb others.
std::uint64_t check_seed(std::uint64_t seed, std::string_view name)
{
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name)
  {
    h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  }
  return splitmix64(seed ^ h);
}

class Suite
{
public:
  Suite(std::string_view suite, std::uint64_t seed)
    : suite_(suite)
    , seed_(seed)
  {}

  std::uint64_t seed_for(std::string_view name) const { return check_seed(seed_, name); }

  void add(std::string name, double deviation, double tolerance, std::string detail = {})
  {
    bool const ok = !std::isnan(deviation) && deviation <= tolerance;
    out_.push_back({suite_, std::move(name), deviation, tolerance, ok, std::move(detail)});
  }

  /// Runs `fn(rng, dev)` for `n` independent streams; `dev` accumulates the max.
  template <typename Fn>
  double max_over(std::string_view name, std::size_t n, Fn &&fn) const
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      auto rng = make_stream(seed_for(name), i);
      worst    = std::max(worst, static_cast<double>(fn(rng)));
    }
    return worst;
  }

  std::vector<Check> take() { return std::move(out_); }

private:
  std::string        suite_;
  std::uint64_t      seed_;
  std::vector<Check> out_;
};

template <typename T>
std::string count_detail(AxiomReport<T> const &r)
{
  std::ostringstream os;
  os << r.checked << " tuples, " << r.violations.size() << " violations";
  return os.str();
}

template <typename Fn>
AxiomReport<FiniteSet> set_axioms(Fn &&dist, std::uint64_t seed, std::size_t n, AxiomMask mask,
                                  samplers::SetShape shape = {}, bool tokens = false)
{
  AxiomCheckOptions opt;
  opt.n      = n;
  opt.seed   = seed;
  opt.axioms = mask;
  auto const pool = samplers::tokens(shape.pool);
  return check_axioms<FiniteSet>(
      dist,
      [&](Rng &rng) -> std::optional<std::array<FiniteSet, 3>> {
        if (tokens)
          return samplers::subset_triple(rng, pool, shape.min_size, shape.max_size);
        return samplers::point_set_triple(rng, shape);
      },
      opt);
}

void identities(Suite &s)
{
  auto const euclid = BaseMetric::euclidean();
  auto const unit   = BaseMetric::discrete(1.0);

  {
    auto const pool = samplers::tokens(12);
    double dev = s.max_over("f-equals-jaccard", 500, [&](Rng &rng) {
      auto a = samplers::bernoulli_subset(rng, pool);
      auto b = samplers::bernoulli_subset(rng, pool);
      return std::abs(average_metric(unit, a, b) - jaccard(a, b));
    });
    s.add("f-equals-jaccard-under-discrete", dev, 1e-12, "500 pairs, 12-element universe");
  }
  {
    auto r = set_axioms([&](FiniteSet const &x, FiniteSet const &y) { return average_metric(euclid, x, y); },
                        s.seed_for("f-axioms"), 1000, kMetricAxioms);
    s.add("f-satisfies-M1-M5", static_cast<double>(r.violations.size()), 0.0, count_detail(r));
  }
  {
    double dev = s.max_over("f-isometry", 200, [&](Rng &rng) {
      auto reg = samplers::random_points(rng, 2, 2);
      FiniteSet a(reg, {0});
      FiniteSet b(reg, {1});
      return std::abs(average_metric(euclid, a, b) - base_distance(euclid, *reg, 0, 1));
    });
    s.add("f-isometric-on-singletons", dev, 1e-12);
  }
  {
    double dev = s.max_over("f-disjoint", 200, [&](Rng &rng) {
      auto reg = samplers::random_points(rng, 12, 2);
      auto a   = samplers::random_subset(rng, reg, 1, 6);
      auto rest = set_difference(FiniteSet(reg, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), a);
      auto b   = samplers::random_subset(rng, reg, 1, 6);
      b        = set_intersection(b, rest);
      if (b.empty())
        b = FiniteSet(reg, {rest.members().front()});
      return std::abs(average_metric(euclid, a, b) - group_average(euclid, a, b));
    });
    s.add("f-equals-g-on-disjoint-sets", dev, 1e-12);
  }
  {
    double dev = s.max_over("t-nonneg", 1000, [&](Rng &rng) {
      auto tri = samplers::point_set_triple(rng);
      return -triple_t(euclid, tri[0], tri[1], tri[2]);
    });
    s.add("t-nonnegative", dev, 1e-12);
  }
  {
    double dev = s.max_over("pair-sum-decomposition", 200, [&](Rng &rng) {
      auto tri = samplers::point_set_triple(rng);
      auto const &a = tri[0];
      auto const &b = tri[1];
      // Split A by membership in C, B by membership in A.
      std::array<FiniteSet, 2> pa{set_intersection(a, tri[2]), set_difference(a, tri[2])};
      std::array<FiniteSet, 2> pb{set_intersection(b, a), set_difference(b, a)};
      double parts = 0.0;
      for (auto const &x : pa)
        for (auto const &y : pb)
          parts += pair_sum(euclid, x, y);
      return std::abs(pair_sum(euclid, a, b) - parts);
    });
    s.add("pair-sum-disjoint-decomposition", dev, 1e-12);
  }
  {
    double dev_u = 0.0;
    double dev_v = 0.0;
    double dev_uh = 0.0;
    double dev_vh = 0.0;
    for (int i = 0; i <= 1; ++i)
      for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 1; ++k)
        {
          std::string const tag = "uv-" + std::to_string(i) + std::to_string(j) + std::to_string(k);
          for (std::size_t n = 0; n < 200; ++n)
          {
            auto rng = make_stream(s.seed_for(tag), n);
            auto tri = samplers::point_set_triple(rng, {12, 1, 6, 2});
            auto const &a = tri[0];
            auto const &b = tri[1];
            double const f = average_metric(euclid, a, b);
            double const h = hausdorff(euclid, a, b);
            UVParams const spec{i, j, k, double(i), double(j), double(k)};
            dev_u = std::max(dev_u, std::abs(u_distance(euclid, a, b, spec) - f));
            UVParams const vspec{i, j, k, double(i), double(j), double(k)};
            dev_v = std::max(dev_v, std::abs(2.0 * v_distance(euclid, a, b, vspec) - f));
            dev_uh = std::max(dev_uh, std::abs(u_distance(euclid, a, b, {i, j, k, kInf, -kInf, 1.0}) - h));
            dev_vh = std::max(dev_vh, std::abs(v_distance(euclid, a, b, {i, j, k, kInf, -kInf, kInf}) - h));
          }
        }
    s.add("u-ij-at-(i,j)-equals-f", dev_u, 1e-9, "all (i,j,k), 200 pairs each");
    s.add("2v-kij-at-(k,i,j)-equals-f", dev_v, 1e-9, "all (i,j,k), 200 pairs each");
    s.add("u-at-(inf,-inf)-equals-h", dev_uh, 1e-12);
    s.add("v-at-(inf,inf,-inf)-equals-h", dev_vh, 1e-12);
  }
  {
    constexpr std::array<double, 8> ps{-2.0, -0.5, 0.0, 0.5, 1.0, 3.0, kInf, -kInf};
    double dev = s.max_over("u-weighted", 300, [&](Rng &rng) {
      auto tri = samplers::point_set_triple(rng, {10, 1, 6, 2});
      UVParams prm;
      prm.i = static_cast<int>(rng() & 1u);
      prm.j = static_cast<int>(rng() & 1u);
      prm.p = ps[rng() % ps.size()];
      prm.q = ps[rng() % ps.size()];
      double const x = u_distance(euclid, tri[0], tri[1], prm);
      double const y = u_distance_weighted(euclid, tri[0], tri[1], prm);
      return std::abs(x - y) / std::max(1.0, std::abs(x));
    });
    s.add("u-gated-equals-u-weighted", dev, 1e-12);
  }
  {
    constexpr std::array<double, 3> ps{0.1, 1.0, 10.0};
    constexpr std::array<double, 4> qs{-1.0, 0.5, 2.0, kInf};
    double dev = s.max_over("u00-closed", 300, [&](Rng &rng) {
      auto pool = samplers::tokens(10);
      auto tri  = samplers::subset_triple(rng, pool, 1, 8);
      double const lambda = 0.5 + 1.5 * static_cast<double>(rng() % 1000) / 1000.0;
      double const p = ps[rng() % ps.size()];
      double const q = qs[rng() % qs.size()];
      auto const d = BaseMetric::discrete(lambda);
      return std::abs(u00_discrete_closed(tri[0], tri[1], p, lambda) -
                      u_distance(d, tri[0], tri[1], {0, 0, 0, p, q, 0.0}));
    });
    s.add("u00-closed-equals-generic-u", dev, 1e-9);
  }
  {
    constexpr std::array<double, 3> ps{-0.1, -1.0, -10.0};
    constexpr std::array<double, 4> qs{-1.0, 0.5, 2.0, kInf};
    double dev = s.max_over("v000-closed", 300, [&](Rng &rng) {
      auto pool = samplers::tokens(10);
      auto tri  = samplers::subset_triple(rng, pool, 1, 8);
      double const lambda = 0.5 + 1.5 * static_cast<double>(rng() % 1000) / 1000.0;
      double const p = ps[rng() % ps.size()];
      double const q = qs[rng() % qs.size()];
      auto const d = BaseMetric::discrete(lambda);
      return std::abs(v000_discrete_closed(tri[0], tri[1], p, lambda) -
                      v_distance(d, tri[0], tri[1], {0, 0, 0, p, q, 0.0}));
    });
    s.add("v000-closed-equals-generic-v", dev, 1e-9);
  }
  {
    double dev_u = 0.0;
    double dev_v = 0.0;
    auto pool = samplers::tokens(12);
    for (std::size_t n = 0; n < 200; ++n)
    {
      auto rng = make_stream(s.seed_for("closed-limits"), n);
      auto a   = samplers::bernoulli_subset(rng, pool);
      auto b   = samplers::bernoulli_subset(rng, pool);
      double const lambda = 0.5 + 1.5 * static_cast<double>(rng() % 1000) / 1000.0;
      double const lj = lambda * jaccard(a, b);
      dev_u = std::max(dev_u, std::abs(u00_discrete_closed(a, b, 1e-6, lambda) - lj));
      dev_v = std::max(dev_v, std::abs(2.0 * v000_discrete_closed(a, b, -1e-6, lambda) - lj));
    }
    s.add("u00-at-p=1e-6-near-lambda-j", dev_u, 1e-4);
    s.add("2v000-at-p=-1e-6-near-lambda-j", dev_v, 1e-4);
  }
  {
    double dev = 0.0;
    auto   pool = samplers::tokens(12);
    for (double nu : {0.0, 0.25, 0.5})
    {
      for (std::size_t n = 0; n < 100; ++n)
      {
        auto rng = make_stream(s.seed_for("dnu-self"), n);
        auto a   = samplers::random_subset(rng, pool, 1, 12);
        dev = std::max(dev, std::abs(d_nu(a, a, nu) - (1.0 - 2.0 * nu) * std::log(double(a.size()))));
      }
    }
    s.add("dnu-self-distance-(1-2nu)log|A|", dev, 0.0);
  }
  {
    auto pool = samplers::tokens(12);
    double mismatches = 0.0;
    for (std::size_t n = 0; n < 1000; ++n)
    {
      auto rng = make_stream(s.seed_for("dnu-card"), n);
      auto tri = samplers::subset_triple(rng, pool, 1, 8);
      auto const &a = tri[0];
      auto const &b = tri[1];
      auto const &c = tri[2];
      bool const tri_ok = d_nu(a, b, 0.5) + d_nu(b, c, 0.5) >= d_nu(a, c, 0.5) - 1e-12;
      bool const card_ok = set_union(a, b).size() * set_union(b, c).size() >=
                           set_union(a, c).size() * b.size();
      mismatches += (tri_ok != card_ok || !card_ok) ? 1.0 : 0.0;
    }
    s.add("dnu-1/2-triangle-iff-cardinality-form", mismatches, 0.0, "1000 triples");
  }
  {
    auto r = set_axioms([](FiniteSet const &x, FiniteSet const &y) { return d_nu(x, y, 0.5); },
                        s.seed_for("dnu-metric"), 1000, kMetricAxioms, {12, 1, 8, 2}, true);
    s.add("dnu-1/2-satisfies-M1-M5", static_cast<double>(r.violations.size()), 0.0, count_detail(r));
  }
  {
    auto r = set_axioms([](FiniteSet const &x, FiniteSet const &y) { return d_nu(x, y, 0.25); },
                        s.seed_for("dnu-partial"), 1000, kPartialMetricAxioms, {12, 1, 8, 2}, true);
    s.add("dnu-1/4-partial-metric", static_cast<double>(r.violations.size()), 0.0, count_detail(r));
  }
  {
    auto r = set_axioms([&](FiniteSet const &x, FiniteSet const &y) { return semi_metric(euclid, x, y); },
                        s.seed_for("e-semi"), 1000, kSemiMetricAxioms);
    s.add("e-satisfies-M1-M4", static_cast<double>(r.violations.size()), 0.0, count_detail(r));
  }
  {
    double dev = s.max_over("e-counterexample", 200, [&](Rng &rng) {
      auto cx = samplers::semi_metric_counterexample(rng);
      double const gap = semi_metric(euclid, cx.a, cx.b) + semi_metric(euclid, cx.b, cx.c) -
                         semi_metric(euclid, cx.a, cx.c);
      double const scale = double(cx.a.size()) * double(cx.b.size()) * double(cx.c.size());
      double const predicted = -triple_t(euclid, cx.delta, cx.eta, cx.eps) / scale;
      return std::abs(gap - predicted);
    });
    s.add("e-counterexample-gap-equals-minus-t(delta,eta,eps)", dev, 1e-9);
  }
  {
    // Points on a line with repeated positions: a pseudo-metric table.
    constexpr std::array<double, 8> pos{0, 0, 1, 2, 2, 3, 5, 5};
    auto reg = std::make_shared<ElementRegistry>();
    std::vector<std::string> ids;
    for (std::size_t n = 0; n < pos.size(); ++n)
    {
      ids.push_back("m" + std::to_string(n));
      reg->add(ids.back());
    }
    std::vector<std::vector<double>> table(pos.size(), std::vector<double>(pos.size()));
    for (std::size_t r = 0; r < pos.size(); ++r)
      for (std::size_t c = 0; c < pos.size(); ++c)
        table[r][c] = std::abs(pos[r] - pos[c]);
    RegistryPtr const shared = reg;
    auto const metric = BaseMetric::matrix(MatrixMetric(shared, ids, table, true));
    AxiomCheckOptions opt;
    opt.n      = 1000;
    opt.seed   = s.seed_for("pseudo-propagation");
    opt.axioms = kPseudoMetricAxioms;
    auto r = check_axioms<FiniteSet>(
        [&](FiniteSet const &x, FiniteSet const &y) { return average_metric(metric, x, y); },
        [&](Rng &rng) -> std::optional<std::array<FiniteSet, 3>> {
          return samplers::subset_triple(rng, shared, 1, 6);
        },
        opt);
    s.add("f-pseudo-metric-under-pseudo-base", static_cast<double>(r.violations.size()), 0.0,
          count_detail(r));
  }
}

void appendix_a(Suite &s)
{
  auto const euclid = BaseMetric::euclidean();
  double rel = 0.0;
  double neg = 0.0;
  for (std::size_t n = 0; n < 300; ++n)
  {
    auto rng = make_stream(s.seed_for("appendixA"), n);
    auto tri = samplers::point_set_triple(rng);
    auto const d = decompose_triangle_gap(euclid, tri[0], tri[1], tri[2]);
    double const scale = std::max({std::abs(d.scaled_gap), std::abs(d.term_sum), 1e-300});
    rel = std::max(rel, std::abs(d.scaled_gap - d.term_sum) / scale);
    neg = std::max(neg, -d.term_sum);
  }
  s.add("seven-part-decomposition-matches-scaled-gap", rel, 1e-9, "300 triples, relative");
  s.add("seven-part-decomposition-nonnegative", neg, 1e-12);
}

void appendix_b(Suite &s)
{
  auto const pool = samplers::tokens(12);
  {
    double dev = 0.0;
    for (double p : {0.1, 1.0, 10.0})
    {
      double const x = std::exp(p);
      for (std::size_t n = 0; n < 1000; ++n)
      {
        auto rng = make_stream(s.seed_for("u00-tau"), n);
        auto tri = samplers::subset_triple(rng, pool, 1, 8);
        dev = std::max(dev, -u00_triangle_tau(tri[0], tri[1], tri[2], x) / (x * x));
      }
    }
    s.add("u00-tau(e^p)-nonnegative", dev, 1e-12, "p in {0.1, 1, 10}, relative to x^2");
  }
  for (double p : {0.1, 1.0, 10.0})
  {
    std::ostringstream name;
    name << "u00-satisfies-M1-M5-at-p=" << p;
    auto r = set_axioms([p](FiniteSet const &x, FiniteSet const &y) { return u00_discrete_closed(x, y, p, 1.0); },
                        s.seed_for(name.str()), 1000, kMetricAxioms, {12, 1, 8, 2}, true);
    s.add(name.str(), static_cast<double>(r.violations.size()), 0.0, count_detail(r));
  }
  {
    double phi0 = 0.0, phi1 = 0.0, dphi1 = 0.0, d2phi1 = 0.0, tau = 0.0;
    for (std::size_t n = 0; n < 1000; ++n)
    {
      auto rng = make_stream(s.seed_for("v000-cubic"), n);
      auto tri = samplers::subset_triple(rng, pool, 1, 8);
      auto const c = v000_triangle_cubic(tri[0], tri[1], tri[2]);
      phi0   = std::max(phi0, -c.phi(0.0));
      phi1   = std::max(phi1, -c.phi(1.0));
      dphi1  = std::max(dphi1, c.dphi(1.0));
      d2phi1 = std::max(d2phi1, -c.d2phi(1.0));
      for (double p : {-0.1, -1.0, -10.0})
      {
        tau = std::max(tau, -c.tau(-std::expm1(p)));
      }
    }
    s.add("v000-phi(0)-nonnegative", phi0, 1e-12);
    s.add("v000-phi(1)-nonnegative", phi1, 1e-12);
    s.add("v000-phi'(1)-nonpositive", dphi1, 1e-12);
    s.add("v000-phi''(1)-nonnegative", d2phi1, 1e-12);
    s.add("v000-tau(1-e^p)-nonnegative", tau, 1e-12, "p in {-0.1, -1, -10}");
  }
  for (double p : {-0.1, -1.0, -10.0})
  {
    std::ostringstream name;
    name << "v000-satisfies-M1-M5-at-p=" << p;
    auto r = set_axioms([p](FiniteSet const &x, FiniteSet const &y) { return v000_discrete_closed(x, y, p, 1.0); },
                        s.seed_for(name.str()), 1000, kMetricAxioms, {12, 1, 8, 2}, true);
    s.add(name.str(), static_cast<double>(r.violations.size()), 0.0, count_detail(r));
  }
}

void duality(Suite &s)
{
  for (std::size_t n = 2; n <= 5; ++n)
  {
    auto const reg = samplers::tokens(n);
    std::vector<ElementIndex> all(n);
    for (std::size_t i = 0; i < n; ++i)
      all[i] = static_cast<ElementIndex>(i);
    FiniteSet const ground(reg, all);
    auto const r = duality_kappa(ground, 1.0);
    std::ostringstream detail;
    detail.precision(12);
    detail << "|X|=" << n << " kappa=" << r.kappa;
    s.add("kappa-pair-constant-|X|=" + std::to_string(n), r.spread, 1e-9, detail.str());
    s.add("kappa-in-(0,1)-|X|=" + std::to_string(n), r.in_unit_interval ? 0.0 : 1.0, 0.0, detail.str());
    if (n == 2)
    {
      s.add("kappa-|X|=2-equals-1/2", std::abs(r.kappa - 0.5), 0.0, detail.str());
    }

    // |C(a) sym C(b)| as a distance on the ground elements: pseudo-metric.
    double bad = 0.0;
    auto   d   = [&](ElementIndex a, ElementIndex b) { return double(containing_symdiff(a, b, ground)); };
    for (auto a : all)
      for (auto b : all)
      {
        bad += (d(a, b) < 0.0 || d(a, b) != d(b, a) || d(a, a) != 0.0) ? 1.0 : 0.0;
        for (auto c : all)
          bad += d(a, b) + d(b, c) < d(a, c) ? 1.0 : 0.0;
      }
    s.add("symdiff-duality-pseudo-metric-|X|=" + std::to_string(n), bad, 0.0);
  }
  {
    AxiomCheckOptions opt;
    opt.n    = 500;
    opt.seed = s.seed_for("f2-axioms");
    auto const euclid = BaseMetric::euclidean();
    struct Tagged
    {
      RegistryPtr registry;
      NestedSet   set;
      bool operator==(Tagged const &o) const { return registry == o.registry && set == o.set; }
    };
    auto r = check_axioms<Tagged>(
        [&](Tagged const &x, Tagged const &y) { return f_k(euclid, *x.registry, x.set, y.set); },
        [](Rng &rng) -> std::optional<std::array<Tagged, 3>> {
          auto t = samplers::nested_triple(rng);
          return std::array<Tagged, 3>{Tagged{t.registry, t.sets[0]}, Tagged{t.registry, t.sets[1]},
                                       Tagged{t.registry, t.sets[2]}};
        },
        opt);
    std::ostringstream detail;
    detail << r.checked << " tuples, " << r.violations.size() << " violations";
    s.add("f2-satisfies-M1-M5", static_cast<double>(r.violations.size()), 0.0, detail.str());
  }
  {
    auto const euclid = BaseMetric::euclidean();
    double dev = s.max_over("f1-equals-f", 300, [&](Rng &rng) {
      auto tri = samplers::point_set_triple(rng);
      return std::abs(f_k(euclid, *tri[0].registry(), NestedSet::from_set(tri[0]), NestedSet::from_set(tri[1])) -
                      average_metric(euclid, tri[0], tri[1]));
    });
    s.add("f1-equals-average-metric", dev, 0.0);
  }
}

void interval(Suite &s)
{
  double dev_closed = 0.0;
  double dev_center = 0.0;
  double dev_stein  = 0.0;
  for (std::size_t n = 0; n < 1000; ++n)
  {
    auto rng = make_stream(s.seed_for("interval-closed"), n);
    auto pr  = samplers::interval_pair_case(rng, n);
    auto const &a = pr[0];
    auto const &b = pr[1];
    IntervalUnion const ua{a};
    IntervalUnion const ub{b};
    double const closed = interval_f_closed(a, b);
    dev_closed = std::max(dev_closed, std::abs(closed - f_continuous(ua, ub)));
    bool const nested = (b.lo <= a.lo && a.hi <= b.hi) || (a.lo <= b.lo && b.hi <= a.hi);
    if (!nested)
    {
      dev_center = std::max(dev_center, std::abs(closed - std::abs(a.center() - b.center())));
    }
    dev_stein = std::max(dev_stein, std::abs(steinhaus(ua, ub) - f_continuous(ua, ub, LineDistance::Discrete)));
  }
  s.add("closed-form-equals-exact-integration", dev_closed, 1e-9,
        "1000 pairs: nested, overlapping, disjoint, shared endpoint");
  s.add("non-nested-equals-center-distance", dev_center, 0.0);
  s.add("steinhaus-equals-f-under-discrete-ground", dev_stein, 1e-12);

  AxiomCheckOptions opt;
  opt.n    = 1000;
  opt.seed = s.seed_for("interval-axioms");
  auto r = check_axioms<Interval>([](Interval const &x, Interval const &y) { return interval_f_closed(x, y); },
                                  [](Rng &rng) -> std::optional<std::array<Interval, 3>> {
                                    return samplers::interval_triple(rng);
                                  },
                                  opt);
  std::ostringstream detail;
  detail << r.checked << " tuples, " << r.violations.size() << " violations";
  s.add("interval-f-satisfies-M1-M5", static_cast<double>(r.violations.size()), 0.0, detail.str());
}

}  // namespace

std::span<const std::string_view> suite_names()
{
  return kSuites;
}

std::vector<Check> run_suite(std::string_view suite, std::uint64_t seed)
{
  if (suite == "all")
  {
    std::vector<Check> all;
    for (auto name : kSuites)
    {
      auto part = run_suite(name, seed);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  Suite s(suite, seed);
  if (suite == "identities")
    identities(s);
  else if (suite == "appendixA")
    appendix_a(s);
  else if (suite == "appendixB")
    appendix_b(s);
  else if (suite == "duality")
    duality(s);
  else if (suite == "interval")
    interval(s);
  else
    throw InvalidParameter("unknown verification suite '" + std::string(suite) + "'");
  return s.take();
}

}  // namespace setmetric::verify
