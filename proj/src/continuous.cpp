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

#include "setmetric/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"
#include "setmetric/random.hpp"

namespace setmetric {

IntervalUnion::IntervalUnion(std::initializer_list<Interval> parts)
  : IntervalUnion(std::vector<Interval>(parts))
{}

IntervalUnion::IntervalUnion(std::vector<Interval> parts)
{
  for (auto const &p : parts)
  {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || p.lo > p.hi)
    {
      throw DomainError("interval requires finite lo <= hi");
    }
  }
  std::erase_if(parts, [](Interval const &p) { return !(p.hi > p.lo); });
  std::sort(parts.begin(), parts.end(), [](Interval const &x, Interval const &y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  for (auto const &p : parts)
  {
    if (!parts_.empty() && p.lo <= parts_.back().hi)
    {
      parts_.back().hi = std::max(parts_.back().hi, p.hi);
    }
    else
    {
      parts_.push_back(p);
    }
  }
}

double IntervalUnion::measure() const noexcept
{
  double m = 0.0;
  for (auto const &p : parts_)
  {
    m += p.length();
  }
  return m;
}

double IntervalUnion::lo() const
{
  if (parts_.empty())
    throw DomainError("empty interval union has no infimum");
  return parts_.front().lo;
}

double IntervalUnion::hi() const
{
  if (parts_.empty())
    throw DomainError("empty interval union has no supremum");
  return parts_.back().hi;
}

bool IntervalUnion::contains(double x) const noexcept
{
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](double v, Interval const &p) { return v < p.lo; });
  return it != parts_.begin() && std::prev(it)->contains(x);
}

IntervalUnion unite(IntervalUnion const &a, IntervalUnion const &b)
{
  std::vector<Interval> all(a.parts().begin(), a.parts().end());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return IntervalUnion(std::move(all));
}

IntervalUnion intersect(IntervalUnion const &a, IntervalUnion const &b)
{
  std::vector<Interval> out;
  auto pa = a.parts();
  auto pb = b.parts();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() && j < pb.size())
  {
    double const lo = std::max(pa[i].lo, pb[j].lo);
    double const hi = std::min(pa[i].hi, pb[j].hi);
    if (lo < hi)
    {
      out.push_back({lo, hi});
    }
    if (pa[i].hi < pb[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion subtract(IntervalUnion const &a, IntervalUnion const &b)
{
  std::vector<Interval> out;
  auto pb = b.parts();
  for (auto part : a.parts())
  {
    double cursor = part.lo;
    for (auto const &cut : pb)
    {
      if (cut.hi <= cursor)
        continue;
      if (cut.lo >= part.hi)
        break;
      if (cut.lo > cursor)
        out.push_back({cursor, cut.lo});
      cursor = std::max(cursor, cut.hi);
      if (cursor >= part.hi)
        break;
    }
    if (cursor < part.hi)
      out.push_back({cursor, part.hi});
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion symmetric_difference(IntervalUnion const &a, IntervalUnion const &b)
{
  return unite(subtract(a, b), subtract(b, a));
}

bool covers(IntervalUnion const &outer, IntervalUnion const &inner)
{
  return subtract(inner, outer).empty();
}

double box_abs_integral(Interval const &a, Interval const &b)
{
  if (a.hi <= b.lo || b.hi <= a.lo)
  {
    // No diagonal crossing: |x - y| is affine on the box.
    return std::abs(b.center() - a.center()) * a.length() * b.length();
  }
  // G(x, y) = -|x - y|^3 / 6 has mixed partial |x - y|; evaluate relative to
  // a local origin to keep the corner values small.
  double const origin = std::min(a.lo, b.lo);
  auto G = [origin](double x, double y) {
    double const r = std::abs((x - origin) - (y - origin));
    return -r * r * r / 6.0;
  };
  return G(a.hi, b.hi) - G(a.lo, b.hi) - G(a.hi, b.lo) + G(a.lo, b.lo);
}

namespace {

void require_measure(IntervalUnion const &s, char const *op)
{
  if (!(s.measure() > 0.0))
  {
    throw DomainError(std::string(op) + ": null-measure set");
  }
}

}  // namespace

double g_continuous(IntervalUnion const &a, IntervalUnion const &b, LineDistance ground)
{
  require_measure(a, "g_continuous");
  require_measure(b, "g_continuous");
  if (ground == LineDistance::Discrete)
  {
    return 1.0;
  }
  double total = 0.0;
  for (auto const &x : a.parts())
  {
    for (auto const &y : b.parts())
    {
      total += box_abs_integral(x, y);
    }
  }
  return total / (a.measure() * b.measure());
}

double f_continuous(IntervalUnion const &a, IntervalUnion const &b, LineDistance ground)
{
  auto const uni = unite(a, b).measure();
  if (!(uni > 0.0))
  {
    throw DomainError("f_continuous: null-measure union");
  }
  auto const b_minus_a = subtract(b, a);
  auto const a_minus_b = subtract(a, b);
  double     out       = 0.0;
  if (double const w = b_minus_a.measure(); w > 0.0)
  {
    out += w / uni * g_continuous(a, b_minus_a, ground);
  }
  if (double const w = a_minus_b.measure(); w > 0.0)
  {
    out += w / uni * g_continuous(a_minus_b, b, ground);
  }
  return out;
}

double interval_f_closed(Interval const &a, Interval const &b)
{
  if (!(a.hi > a.lo) || !(b.hi > b.lo))
  {
    throw DomainError("interval_f_closed: degenerate interval");
  }
  if (a == b)
  {
    return 0.0;
  }
  bool const a_in_b = b.lo <= a.lo && a.hi <= b.hi;
  bool const b_in_a = a.lo <= b.lo && b.hi <= a.hi;
  if (!a_in_b && !b_in_a)
  {
    return std::abs(a.center() - b.center());
  }
  double const dsup = std::abs(a.hi - b.hi);
  double const dinf = std::abs(a.lo - b.lo);
  double const span = std::max(a.hi, b.hi) - std::min(a.lo, b.lo);
  return 0.5 * (dsup + dinf) - dsup * dinf / span;
}

double steinhaus(IntervalUnion const &a, IntervalUnion const &b)
{
  auto const uni = unite(a, b).measure();
  if (!(uni > 0.0))
  {
    throw DomainError("steinhaus: null-measure union");
  }
  return symmetric_difference(a, b).measure() / uni;
}

namespace {

// Maps t in [0, mu(P)) to the point at cumulative measure t.
double locate(IntervalUnion const &population, double t)
{
  for (auto const &p : population.parts())
  {
    if (t < p.length())
    {
      return p.lo + t;
    }
    t -= p.length();
  }
  return population.parts().back().hi;
}

// Uniform in [0, 1) from the top 53 bits; portable across standard libraries.
double unit_uniform(Rng &rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_plan(std::size_t n, char const *op)
{
  if (n == 0)
  {
    throw InvalidParameter(std::string(op) + ": sample count must be at least 1");
  }
}

}  // namespace

std::vector<double> draw_sample(SamplePlan const &plan)
{
  require_plan(plan.n, "draw_sample");
  double const mu = plan.population.measure();
  if (!(mu > 0.0))
  {
    throw DomainError("draw_sample: null-measure population");
  }
  std::vector<double> points;
  points.reserve(plan.n);
  if (plan.mode == SamplingMode::Random)
  {
    Rng rng(stream_seed(plan.seed, 0));
    for (std::size_t i = 0; i < plan.n; ++i)
    {
      points.push_back(locate(plan.population, unit_uniform(rng) * mu));
    }
  }
  else
  {
    for (std::size_t i = 0; i < plan.n; ++i)
    {
      double const t = (static_cast<double>(i) + 0.5) / static_cast<double>(plan.n) * mu;
      points.push_back(locate(plan.population, t));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

Estimate estimate_f(Membership const &in_a, Membership const &in_b, SamplePlan const &plan)
{
  auto const points = draw_sample(plan);
  auto       reg    = std::make_shared<ElementRegistry>();
  std::vector<ElementIndex> sa;
  std::vector<ElementIndex> sb;
  for (std::size_t i = 0; i < points.size(); ++i)
  {
    bool const a = in_a(points[i]);
    bool const b = in_b(points[i]);
    if (!a && !b)
    {
      continue;
    }
    auto const idx = reg->add("s" + std::to_string(i), {points[i]});
    if (a)
      sa.push_back(idx);
    if (b)
      sb.push_back(idx);
  }
  if (sa.empty() || sb.empty())
  {
    throw DomainError("estimate_f: sample misses " + std::string(sa.empty() ? "A" : "B") + " (|S n A| = " +
                      std::to_string(sa.size()) + ", |S n B| = " + std::to_string(sb.size()) + ")");
  }
  Estimate out;
  out.sample_size = points.size();
  out.size_a      = sa.size();
  out.size_b      = sb.size();
  RegistryPtr const shared = reg;
  out.value = average_metric(BaseMetric::euclidean(), FiniteSet(shared, std::move(sa)),
                             FiniteSet(shared, std::move(sb)));
  return out;
}

Estimate estimate_f(IntervalUnion const &a, IntervalUnion const &b, SamplePlan const &plan)
{
  if (!covers(plan.population, unite(a, b)))
  {
    throw DomainError("estimate_f: population does not cover A u B");
  }
  return estimate_f([&](double x) { return a.contains(x); },
                    [&](double x) { return b.contains(x); }, plan);
}

double rho_ratio(Membership const &in_a, Membership const &in_b, SamplePlan const &plan)
{
  auto const  points = draw_sample(plan);
  std::size_t na     = 0;
  std::size_t nb     = 0;
  for (double x : points)
  {
    na += in_a(x) ? 1 : 0;
    nb += in_b(x) ? 1 : 0;
  }
  if (nb == 0)
  {
    throw DomainError("rho_ratio: no sample point falls in B");
  }
  return static_cast<double>(na) / static_cast<double>(nb);
}

double rho_ratio(IntervalUnion const &a, IntervalUnion const &b, SamplePlan const &plan)
{
  if (!covers(plan.population, unite(a, b)))
  {
    throw DomainError("rho_ratio: population does not cover A u B");
  }
  return rho_ratio([&](double x) { return a.contains(x); },
                   [&](double x) { return b.contains(x); }, plan);
}

Estimate estimate_f(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                    FiniteSamplePlan const &plan)
{
  require_plan(plan.n, "estimate_f");
  require_same_registry(a, b);
  require_same_registry(a, plan.population);
  if (plan.population.empty())
  {
    throw DomainError("estimate_f: empty population");
  }
  if (!set_difference(set_union(a, b), plan.population).empty())
  {
    throw DomainError("estimate_f: population does not cover A u B");
  }
  auto const                pool = plan.population.members();
  std::vector<ElementIndex> drawn;
  drawn.reserve(plan.n);
  if (plan.mode == SamplingMode::Random)
  {
    Rng rng(stream_seed(plan.seed, 0));
    for (std::size_t i = 0; i < plan.n; ++i)
    {
      auto const k = static_cast<std::size_t>(unit_uniform(rng) * static_cast<double>(pool.size()));
      drawn.push_back(pool[std::min(k, pool.size() - 1)]);
    }
  }
  else
  {
    for (std::size_t i = 0; i < plan.n; ++i)
    {
      auto const k = static_cast<std::size_t>((static_cast<double>(i) + 0.5) *
                                              static_cast<double>(pool.size()) /
                                              static_cast<double>(plan.n));
      drawn.push_back(pool[std::min(k, pool.size() - 1)]);
    }
  }
  FiniteSet const sample(a.registry(), std::move(drawn));
  auto const      sa = set_intersection(sample, a);
  auto const      sb = set_intersection(sample, b);
  if (sa.empty() || sb.empty())
  {
    throw DomainError("estimate_f: sample misses " + std::string(sa.empty() ? "A" : "B"));
  }
  Estimate out;
  out.sample_size = sample.size();
  out.size_a      = sa.size();
  out.size_b      = sb.size();
  out.value       = average_metric(metric, sa, sb);
  return out;
}

FuzzySet::FuzzySet(RegistryPtr registry, std::vector<std::pair<ElementIndex, double>> grades)
  : registry_(std::move(registry))
  , grades_(std::move(grades))
{
  if (!registry_ || registry_->size() == 0)
  {
    throw DomainError("fuzzy set: empty universe");
  }
  std::sort(grades_.begin(), grades_.end());
  bool positive = false;
  for (std::size_t i = 0; i < grades_.size(); ++i)
  {
    auto const [id, m] = grades_[i];
    if (id >= registry_->size())
      throw DomainError("fuzzy set: element outside the registry");
    if (i > 0 && grades_[i - 1].first == id)
      throw DomainError("fuzzy set: element '" + registry_->id(id) + "' graded twice");
    if (!(m >= 0.0 && m <= 1.0))
      throw DomainError("fuzzy set: membership of '" + registry_->id(id) + "' outside [0, 1]");
    positive = positive || m > 0.0;
  }
  if (!positive)
  {
    throw DomainError("fuzzy set: no element has positive membership");
  }
  std::erase_if(grades_, [](auto const &g) { return g.second == 0.0; });
}

FiniteSet FuzzySet::cut(double alpha) const
{
  std::vector<ElementIndex> members;
  for (auto const &[id, m] : grades_)
  {
    if (m >= alpha && m > 0.0)
      members.push_back(id);
  }
  return {registry_, std::move(members)};
}

std::vector<double> default_alpha_grid()
{
  std::vector<double> grid;
  for (int k = 1; k <= 10; ++k)
  {
    grid.push_back(k / 10.0);
  }
  return grid;
}

namespace {

struct LevelSet
{
  std::vector<ElementIndex> members;
  double                    alpha;

  friend auto operator<=>(LevelSet const &, LevelSet const &) = default;
};

}  // namespace

double fuzzy_distance(BaseMetric const &metric, FuzzySet const &a, FuzzySet const &b,
                      std::span<const double> grid, double c)
{
  if (a.registry() != b.registry())
  {
    throw DomainError("fuzzy_distance: fuzzy sets over different universes");
  }
  if (!(c >= 0.0) || !std::isfinite(c))
  {
    throw InvalidParameter("fuzzy_distance: alpha weight must be a non-negative real");
  }
  std::vector<LevelSet> ca;
  std::vector<LevelSet> cb;
  for (double alpha : grid)
  {
    if (!(alpha > 0.0 && alpha <= 1.0))
    {
      throw InvalidParameter("fuzzy_distance: alpha levels must lie in (0, 1]");
    }
    auto sa = a.cut(alpha);
    auto sb = b.cut(alpha);
    if (sa.empty() || sb.empty())
    {
      continue;
    }
    metric.validate(*a.registry(), sa.members());
    metric.validate(*a.registry(), sb.members());
    ElementIndex const probe[2] = {sa.members().front(), sb.members().front()};
    metric.validate(*a.registry(), probe);
    ca.push_back({{sa.members().begin(), sa.members().end()}, alpha});
    cb.push_back({{sb.members().begin(), sb.members().end()}, alpha});
  }
  if (ca.empty())
  {
    throw DomainError("fuzzy_distance: no alpha level has non-empty cuts in both sets");
  }
  auto canonical = [](std::vector<LevelSet> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  canonical(ca);
  canonical(cb);
  auto const &reg = *a.registry();
  return average_metric_of<LevelSet>(ca, cb, [&](LevelSet const &x, LevelSet const &y) {
    return average_metric_sorted(metric, reg, x.members, y.members) + c * std::abs(x.alpha - y.alpha);
  });
}

}  // namespace setmetric
