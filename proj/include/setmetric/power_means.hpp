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

#include <span>

#include "setmetric/base_metric.hpp"
#include "setmetric/registry.hpp"

namespace setmetric {

/// Which mean family: 0 is the exponential type (1/p) ln(mean of e^{p psi}),
/// 1 is the ordinary power type (mean of psi^p)^{1/p}.
enum class MeanType : int
{
  Exponential = 0,
  Power       = 1,
};

/// Maps the 0/1 selector to a MeanType; throws InvalidParameter otherwise.
MeanType mean_type(int selector);

// Extended weighted power means. `p` may be any real or +-inf. p = 0 and
// p = +-inf are evaluated by their analytic limits:
//   power type:       p=0 geometric mean, +inf max, -inf min
//   exponential type: p=0 arithmetic mean, +inf max, -inf min
// Weights lie in [0, 1] with at least one positive. Zero-weight entries are
// dropped before anything is evaluated (the 0 * inf = 0 convention), which
// also makes the max/min limits range over the positively weighted entries.

/// Throws DomainError for a negative value; InvalidParameter for bad weights
/// or a length mismatch. Any zero value with p <= 0 yields 0.
double power_mean_1(std::span<const double> values, std::span<const double> weights, double p);
double power_mean_1(std::span<const double> values, double p);

/// Evaluated with max-shifted exponentials, so p * max(psi) in the hundreds
/// does not overflow.
double power_mean_0(std::span<const double> values, std::span<const double> weights, double p);
double power_mean_0(std::span<const double> values, double p);

double power_mean(MeanType type, std::span<const double> values, std::span<const double> weights,
                  double p);
double power_mean(MeanType type, std::span<const double> values, double p);

/// Parameters of the composed distances u^{(i,j)}_{p,q} and
/// v^{(k,i,j)}_{r,p,q}. `k` and `r` are only read by v.
struct UVParams
{
  int    i = 1;
  int    j = 1;
  int    k = 1;
  double p = 1.0;
  double q = 1.0;
  double r = 1.0;
};

/// u(A, B): outer mean M_p^{(i)} over x in A u B of the gated inner mean,
/// M_q^{(j)} over y in A of d(x, y) for x in B\A, over y in B for x in A\B,
/// and 0 for x in A n B.
///
/// With (p, q) = (i, j) this is the average metric f; with (p, q) = (+inf, -inf)
/// it is the Hausdorff distance. Other parameter choices are exploratory and
/// carry no metric guarantee.
double u_distance(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                  UVParams const &params);

/// The same u written as a single weighted inner mean over y in A u B with
/// weight [x in A\B][y in B] + [x in A n B][x = y] + [x in B\A][y in A].
double u_distance_weighted(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                           UVParams const &params);

/// v(A, B): outer M_r^{(k)} over S in {A, B} of M_p^{(i)} over x in A u B of
/// [x not in S] M_q^{(j)}(y in S, d(x, y)). 2 v = f at (r, p, q) = (k, i, j);
/// v = h at (+inf, +inf, -inf).
double v_distance(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                  UVParams const &params);

/// Closed form of u^{(0,0)}_{p,q} under the discrete metric scaled by lambda:
/// (1/p) ln((e^{p lambda} |A sym B| + |A n B|) / |A u B|), independent of q.
/// A metric for p > 0; p = 0 returns the limit lambda * j(A, B).
/// Throws InvalidParameter for p < 0.
double u00_discrete_closed(FiniteSet const &a, FiniteSet const &b, double p, double lambda);

/// Closed form of v^{(0,0,0)}_{0,p,q} under the discrete metric scaled by
/// lambda. A metric for p < 0; p = 0 returns the limit lambda * j(A, B) / 2
/// (2 v = f = lambda j). Throws InvalidParameter for p > 0.
double v000_discrete_closed(FiniteSet const &a, FiniteSet const &b, double p, double lambda);

/// D_nu(A, B) = log|A u B| - nu log(|A||B|), nu in [0, 1/2]. A metric at
/// nu = 1/2; a partial metric (self-distance (1 - 2 nu) log|A|) below it.
double d_nu(FiniteSet const &a, FiniteSet const &b, double nu);

// Triangle-gap polynomials for the two discrete closed forms.

/// Q_AB(x) Q_BC(x) - Q_AC(x) with Q_XY(x) = (x |X sym Y| + |X n Y|) / |X u Y|;
/// non-negative for x >= 1 exactly when u00 is triangular on (A, B, C) at
/// x = e^{p lambda}.
double u00_triangle_tau(FiniteSet const &a, FiniteSet const &b, FiniteSet const &c, double x);

/// tau(y) = P_AC(y) - P_AB(y) P_BC(y), P_XY(y) = (1 - |X\Y| y/|XuY|)(1 - |Y\X| y/|XuY|),
/// written as y * phi(y) with phi cubic. Non-negativity on y in [0, 1) is the
/// triangle inequality for v000 at y = 1 - e^{p lambda}.
struct TriangleCubic
{
  double coeff[4] = {0, 0, 0, 0};  // phi(y) = sum coeff[k] y^k
  double phi(double y) const;
  double dphi(double y) const;
  double d2phi(double y) const;
  double tau(double y) const { return y * phi(y); }
};

TriangleCubic v000_triangle_cubic(FiniteSet const &a, FiniteSet const &b, FiniteSet const &c);

}  // namespace setmetric
