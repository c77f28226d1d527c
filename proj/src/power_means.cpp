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

#include "setmetric/power_means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"

namespace setmetric {

namespace {

struct Weighted
{
  std::vector<double> values;
  std::vector<double> weights;
  double              total = 0.0;
};

// Validates the inputs and keeps only the positively weighted entries.
Weighted positive_entries(std::span<const double> values, std::span<const double> weights,
                          double p, bool nonneg_values)
{
  if (values.size() != weights.size())
  {
    throw InvalidParameter("power mean: " + std::to_string(values.size()) + " values but " +
                           std::to_string(weights.size()) + " weights");
  }
  if (std::isnan(p))
  {
    throw InvalidParameter("power mean: p is NaN");
  }
  Weighted out;
  for (std::size_t n = 0; n < values.size(); ++n)
  {
    double const w = weights[n];
    double const v = values[n];
    if (!(w >= 0.0 && w <= 1.0))
    {
      throw InvalidParameter("power mean: weights must lie in [0, 1]");
    }
    if (std::isnan(v))
    {
      throw DomainError("power mean: NaN value");
    }
    if (w == 0.0)
    {
      continue;  // 0 * inf = 0: unweighted entries never enter the mean
    }
    if (!std::isfinite(v))
    {
      throw DomainError("power mean: non-finite value");
    }
    if (nonneg_values && v < 0.0)
    {
      throw DomainError("power mean: negative value");
    }
    if (w > 0.0)
    {
      out.values.push_back(v);
      out.weights.push_back(w);
      out.total += w;
    }
  }
  if (out.values.empty())
  {
    throw InvalidParameter("power mean: at least one weight must be positive");
  }
  return out;
}

std::vector<double> unit_weights(std::size_t n)
{
  return std::vector<double>(n, 1.0);
}

}  // namespace

MeanType mean_type(int selector)
{
  if (selector == 0)
    return MeanType::Exponential;
  if (selector == 1)
    return MeanType::Power;
  throw InvalidParameter("mean type selector must be 0 or 1, got " + std::to_string(selector));
}

double power_mean_1(std::span<const double> values, std::span<const double> weights, double p)
{
  auto const e = positive_entries(values, weights, p, true);
  auto const [lo, hi] = std::minmax_element(e.values.begin(), e.values.end());
  if (p == std::numeric_limits<double>::infinity())
  {
    return *hi;
  }
  if (p == -std::numeric_limits<double>::infinity())
  {
    return *lo;
  }
  if (p <= 0.0 && *lo == 0.0)
  {
    return 0.0;
  }
  if (*hi == 0.0)
  {
    return 0.0;
  }
  if (p == 0.0)
  {
    double acc = 0.0;
    for (std::size_t n = 0; n < e.values.size(); ++n)
    {
      acc += e.weights[n] * std::log(e.values[n]);
    }
    return std::exp(acc / e.total);
  }
  if (p == 1.0)
  {
    double acc = 0.0;
    for (std::size_t n = 0; n < e.values.size(); ++n)
    {
      acc += e.weights[n] * e.values[n];
    }
    return acc / e.total;
  }
  // Factor out the extreme that keeps every ratio^p <= 1 and accumulate
  // ratio^p - 1, which stays accurate as p approaches 0.
  double const scale     = p > 0.0 ? *hi : *lo;
  double const log_scale = std::log(scale);
  double       acc       = 0.0;
  for (std::size_t n = 0; n < e.values.size(); ++n)
  {
    acc += e.weights[n] * std::expm1(p * (std::log(e.values[n]) - log_scale));
  }
  return scale * std::exp(std::log1p(acc / e.total) / p);
}

double power_mean_1(std::span<const double> values, double p)
{
  auto const w = unit_weights(values.size());
  return power_mean_1(values, w, p);
}

double power_mean_0(std::span<const double> values, std::span<const double> weights, double p)
{
  auto const e = positive_entries(values, weights, p, false);
  auto const [lo, hi] = std::minmax_element(e.values.begin(), e.values.end());
  if (p == std::numeric_limits<double>::infinity())
  {
    return *hi;
  }
  if (p == -std::numeric_limits<double>::infinity())
  {
    return *lo;
  }
  if (p == 0.0)
  {
    double acc = 0.0;
    for (std::size_t n = 0; n < e.values.size(); ++n)
    {
      acc += e.weights[n] * e.values[n];
    }
    return acc / e.total;
  }
  double const shift = p > 0.0 ? *hi : *lo;
  double       acc   = 0.0;
  for (std::size_t n = 0; n < e.values.size(); ++n)
  {
    acc += e.weights[n] * std::expm1(p * (e.values[n] - shift));
  }
  return shift + std::log1p(acc / e.total) / p;
}

double power_mean_0(std::span<const double> values, double p)
{
  auto const w = unit_weights(values.size());
  return power_mean_0(values, w, p);
}

double power_mean(MeanType type, std::span<const double> values, std::span<const double> weights,
                  double p)
{
  return type == MeanType::Power ? power_mean_1(values, weights, p)
                                 : power_mean_0(values, weights, p);
}

double power_mean(MeanType type, std::span<const double> values, double p)
{
  auto const w = unit_weights(values.size());
  return power_mean(type, values, w, p);
}

namespace {

struct Prepared
{
  MeanType outer;
  MeanType inner;
  MeanType top;
};

Prepared prepare(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                 UVParams const &params, bool uses_top)
{
  if (a.empty() || b.empty())
  {
    throw DomainError("composed distance: empty input set");
  }
  require_same_registry(a, b);
  auto const all = set_union(a, b);
  metric.validate(*a.registry(), all.members());
  for (double x : {params.p, params.q, params.r})
  {
    if (std::isnan(x))
    {
      throw InvalidParameter("composed distance: NaN parameter");
    }
  }
  return {mean_type(params.i), mean_type(params.j), uses_top ? mean_type(params.k) : MeanType::Power};
}

// M_q^{(j)} over y in `s` of d(x, y).
template <typename Dist>
double inner_mean(Dist &dist, ElementIndex x, FiniteSet const &s, MeanType type, double q,
                  std::vector<double> &scratch)
{
  scratch.clear();
  for (auto y : s.members())
  {
    scratch.push_back(dist(x, y));
  }
  return power_mean(type, scratch, q);
}

}  // namespace

double u_distance(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                  UVParams const &params)
{
  auto const types = prepare(metric, a, b, params, false);
  auto const all   = set_union(a, b);
  return metric.with_distance(*a.registry(), [&](auto dist) {
    std::vector<double> psi;
    std::vector<double> scratch;
    psi.reserve(all.size());
    for (auto x : all.members())
    {
      bool const in_a = a.contains(x);
      bool const in_b = b.contains(x);
      if (in_a && in_b)
      {
        psi.push_back(0.0);
      }
      else
      {
        psi.push_back(inner_mean(dist, x, in_a ? b : a, types.inner, params.q, scratch));
      }
    }
    return power_mean(types.outer, psi, params.p);
  });
}

double u_distance_weighted(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                           UVParams const &params)
{
  auto const types = prepare(metric, a, b, params, false);
  auto const all   = set_union(a, b);
  return metric.with_distance(*a.registry(), [&](auto dist) {
    std::vector<double> psi;
    std::vector<double> values;
    std::vector<double> weights;
    for (auto x : all.members())
    {
      bool const x_in_a = a.contains(x);
      bool const x_in_b = b.contains(x);
      values.clear();
      weights.clear();
      for (auto y : all.members())
      {
        bool const w = (x_in_a && !x_in_b && b.contains(y)) || (x_in_a && x_in_b && x == y) ||
                       (x_in_b && !x_in_a && a.contains(y));
        values.push_back(dist(x, y));
        weights.push_back(w ? 1.0 : 0.0);
      }
      psi.push_back(power_mean(types.inner, values, weights, params.q));
    }
    return power_mean(types.outer, psi, params.p);
  });
}

double v_distance(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                  UVParams const &params)
{
  auto const types = prepare(metric, a, b, params, true);
  auto const all   = set_union(a, b);
  return metric.with_distance(*a.registry(), [&](auto dist) {
    std::vector<double> scratch;
    std::vector<double> psi;
    double              branch[2];
    FiniteSet const    *sides[2] = {&a, &b};
    for (int side = 0; side < 2; ++side)
    {
      auto const &s = *sides[side];
      psi.clear();
      for (auto x : all.members())
      {
        psi.push_back(s.contains(x) ? 0.0
                                    : inner_mean(dist, x, s, types.inner, params.q, scratch));
      }
      branch[side] = power_mean(types.outer, psi, params.p);
    }
    return power_mean(types.top, branch, params.r);
  });
}

namespace {

struct Counts
{
  double a_only;  // |A \ B|
  double b_only;  // |B \ A|
  double both;    // |A n B|
  double uni;     // |A u B|
  double a;
  double b;
};

Counts counts(FiniteSet const &a, FiniteSet const &b, char const *op)
{
  if (a.empty() || b.empty())
  {
    throw DomainError(std::string(op) + ": empty input set");
  }
  require_same_registry(a, b);
  Counts c{};
  c.a_only = static_cast<double>(set_difference(a, b).size());
  c.b_only = static_cast<double>(set_difference(b, a).size());
  c.both   = static_cast<double>(a.size()) - c.a_only;
  c.uni    = c.a_only + c.b_only + c.both;
  c.a      = static_cast<double>(a.size());
  c.b      = static_cast<double>(b.size());
  return c;
}

void require_lambda(double lambda)
{
  if (!(lambda > 0.0) || !std::isfinite(lambda))
  {
    throw InvalidParameter("lambda must be a positive finite real");
  }
}

// (1/p) ln(1 + (e^{p lambda} - 1) * frac), stable for small |p lambda|.
double log_mix_over_p(double p, double lambda, double frac)
{
  double const pl = p * lambda;
  if (pl > 1.0)
  {
    // ln(e^{pl} frac + (1 - frac)) = pl + ln(frac + (1 - frac) e^{-pl})
    return lambda + std::log(frac + (1.0 - frac) * std::exp(-pl)) / p;
  }
  return std::log1p(std::expm1(pl) * frac) / p;
}

}  // namespace

double u00_discrete_closed(FiniteSet const &a, FiniteSet const &b, double p, double lambda)
{
  require_lambda(lambda);
  if (!(p >= 0.0))
  {
    throw InvalidParameter("u00 closed form requires p >= 0");
  }
  auto const c   = counts(a, b, "u00_discrete_closed");
  double const sym = c.a_only + c.b_only;
  if (sym == 0.0)
  {
    return 0.0;
  }
  if (p == 0.0)
  {
    return lambda * sym / c.uni;
  }
  if (std::isinf(p))
  {
    return lambda;
  }
  return log_mix_over_p(p, lambda, sym / c.uni);
}

double v000_discrete_closed(FiniteSet const &a, FiniteSet const &b, double p, double lambda)
{
  require_lambda(lambda);
  if (!(p <= 0.0))
  {
    throw InvalidParameter("v000 closed form requires p <= 0");
  }
  auto const c = counts(a, b, "v000_discrete_closed");
  if (c.a_only + c.b_only == 0.0)
  {
    return 0.0;
  }
  if (p == 0.0)
  {
    return lambda * (c.a_only + c.b_only) / (2.0 * c.uni);
  }
  if (std::isinf(p))
  {
    // Both factors tend to |A|/|AuB| and |B|/|AuB|; the log is finite so v -> 0.
    return 0.0;
  }
  // (x|B\A| + |A|)/|AuB| = 1 + (x - 1)|B\A|/|AuB|
  return 0.5 * (log_mix_over_p(p, lambda, c.b_only / c.uni) +
                log_mix_over_p(p, lambda, c.a_only / c.uni));
}

double d_nu(FiniteSet const &a, FiniteSet const &b, double nu)
{
  if (!(nu >= 0.0 && nu <= 0.5))
  {
    throw InvalidParameter("nu must lie in [0, 1/2]");
  }
  auto const c = counts(a, b, "d_nu");
  // The second term vanishes exactly when A = B, leaving (1 - 2 nu) log|A|.
  double const lu = std::log(c.uni);
  return (1.0 - 2.0 * nu) * lu + nu * ((lu - std::log(c.a)) + (lu - std::log(c.b)));
}

double u00_triangle_tau(FiniteSet const &a, FiniteSet const &b, FiniteSet const &c, double x)
{
  auto q = [x](Counts const &k) { return (x * (k.a_only + k.b_only) + k.both) / k.uni; };
  return q(counts(a, b, "u00_triangle_tau")) * q(counts(b, c, "u00_triangle_tau")) -
         q(counts(a, c, "u00_triangle_tau"));
}

double TriangleCubic::phi(double y) const
{
  return coeff[0] + y * (coeff[1] + y * (coeff[2] + y * coeff[3]));
}

double TriangleCubic::dphi(double y) const
{
  return coeff[1] + y * (2.0 * coeff[2] + y * 3.0 * coeff[3]);
}

double TriangleCubic::d2phi(double y) const
{
  return 2.0 * coeff[2] + 6.0 * coeff[3] * y;
}

TriangleCubic v000_triangle_cubic(FiniteSet const &a, FiniteSet const &b, FiniteSet const &c)
{
  using Poly = std::vector<double>;
  auto mul = [](Poly const &x, Poly const &y) {
    Poly out(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        out[i + j] += x[i] * y[j];
    return out;
  };
  auto pair_poly = [&](Counts const &k) {
    return mul(Poly{1.0, -k.a_only / k.uni}, Poly{1.0, -k.b_only / k.uni});
  };
  Poly const ac = pair_poly(counts(a, c, "v000_triangle_cubic"));
  Poly const ab = pair_poly(counts(a, b, "v000_triangle_cubic"));
  Poly const bc = pair_poly(counts(b, c, "v000_triangle_cubic"));
  Poly       tau = mul(ab, bc);
  for (auto &x : tau)
    x = -x;
  for (std::size_t i = 0; i < ac.size(); ++i)
    tau[i] += ac[i];
  // tau[0] = 1 - 1 = 0, so phi = tau / y.
  TriangleCubic out;
  for (std::size_t k = 0; k < 4; ++k)
    out.coeff[k] = tau[k + 1];
  return out;
}

}  // namespace setmetric
