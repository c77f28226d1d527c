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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "setmetric/base_metric.hpp"
#include "setmetric/registry.hpp"

namespace setmetric {

/// Closed real interval [lo, hi].
struct Interval
{
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  double center() const noexcept { return 0.5 * (lo + hi); }
  bool   contains(double x) const noexcept { return lo <= x && x <= hi; }

  friend bool operator==(Interval const &, Interval const &) = default;
};

/// A finite union of intervals, stored as sorted, pairwise-disjoint parts of
/// positive length. Overlapping or touching inputs are merged and zero-length
/// parts dropped, since they carry no measure. May be empty (measure zero).
class IntervalUnion
{
public:
  IntervalUnion() = default;
  IntervalUnion(std::initializer_list<Interval> parts);
  explicit IntervalUnion(std::vector<Interval> parts);

  std::span<const Interval> parts() const noexcept { return parts_; }
  bool   empty() const noexcept { return parts_.empty(); }
  double measure() const noexcept;
  double lo() const;
  double hi() const;

  /// Membership of a point (closed parts).
  bool contains(double x) const noexcept;

  friend bool operator==(IntervalUnion const &, IntervalUnion const &) = default;

private:
  std::vector<Interval> parts_;
};

IntervalUnion unite(IntervalUnion const &a, IntervalUnion const &b);
IntervalUnion intersect(IntervalUnion const &a, IntervalUnion const &b);
IntervalUnion subtract(IntervalUnion const &a, IntervalUnion const &b);
IntervalUnion symmetric_difference(IntervalUnion const &a, IntervalUnion const &b);

/// True when `outer` contains `inner` up to a null set.
bool covers(IntervalUnion const &outer, IntervalUnion const &inner);

/// Ground distance on the real line for the measure-based distances.
enum class LineDistance
{
  Absolute,  // |x - y|
  Discrete,  // 1 off the diagonal (the diagonal is a null set)
};

/// Exact integral of |x - y| over the box a x b.
double box_abs_integral(Interval const &a, Interval const &b);

/// g(A, B) = (1 / (mu(A) mu(B))) int_A int_B d(x, y). Evaluated exactly, part
/// pair by part pair. Throws DomainError for a null-measure argument.
double g_continuous(IntervalUnion const &a, IntervalUnion const &b,
                    LineDistance ground = LineDistance::Absolute);

/// f(A, B) = mu(B\A)/mu(AuB) g(A, B\A) + mu(A\B)/mu(AuB) g(A\B, B). A term whose
/// coefficient is zero is skipped, so g never sees a null set.
double f_continuous(IntervalUnion const &a, IntervalUnion const &b,
                    LineDistance ground = LineDistance::Absolute);

/// f(A, B) for two single intervals in closed form: the distance between the
/// centers unless one interval properly contains the other, in which case
///
///   (|sup A - sup B| + |inf A - inf B|) / 2
///     - |sup A - sup B| |inf A - inf B| / (sup(AuB) - inf(AuB)).
///
/// Equal intervals give 0. Throws DomainError for a degenerate interval.
double interval_f_closed(Interval const &a, Interval const &b);

/// mu(A sym B) / mu(A u B).
double steinhaus(IntervalUnion const &a, IntervalUnion const &b);

// Sampling estimation.

enum class SamplingMode
{
  Random,      // seeded uniform draws with respect to measure
  Systematic,  // one point at the center of each of n equal-measure cells
};

struct SamplePlan
{
  IntervalUnion population;
  std::size_t   n    = 1000;
  std::uint64_t seed = 0;
  SamplingMode  mode = SamplingMode::Random;
};

/// The n sample points of `plan`, sorted with duplicates removed.
std::vector<double> draw_sample(SamplePlan const &plan);

using Membership = std::function<bool(double)>;

struct Estimate
{
  double      value       = 0.0;
  std::size_t sample_size = 0;  // distinct points drawn
  std::size_t size_a      = 0;  // |S n A|
  std::size_t size_b      = 0;  // |S n B|
};

/// f(S n A, S n B) for a sample S of the population under |x - y|. Throws
/// DomainError when either intersection is empty.
Estimate estimate_f(Membership const &in_a, Membership const &in_b, SamplePlan const &plan);

/// As above, after checking that the population covers A u B.
Estimate estimate_f(IntervalUnion const &a, IntervalUnion const &b, SamplePlan const &plan);

/// |S n A| / |S n B|. Throws DomainError when S n B is empty.
double rho_ratio(Membership const &in_a, Membership const &in_b, SamplePlan const &plan);
double rho_ratio(IntervalUnion const &a, IntervalUnion const &b, SamplePlan const &plan);

/// A finite population: n ids drawn with replacement (Random) or on an even
/// stride (Systematic) from `population`.
struct FiniteSamplePlan
{
  FiniteSet     population;
  std::size_t   n    = 1000;
  std::uint64_t seed = 0;
  SamplingMode  mode = SamplingMode::Random;
};

Estimate estimate_f(BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b,
                    FiniteSamplePlan const &plan);

// Fuzzy sets.

/// Membership grades over a finite universe (the registry). Elements not
/// listed have grade 0.
class FuzzySet
{
public:
  /// Throws DomainError for grades outside [0, 1], repeated ids, or when no
  /// grade is positive.
  FuzzySet(RegistryPtr registry, std::vector<std::pair<ElementIndex, double>> grades);

  RegistryPtr const &registry() const noexcept { return registry_; }
  std::span<const std::pair<ElementIndex, double>> grades() const noexcept { return grades_; }

  /// The crisp alpha-level set {x : m(x) >= alpha}.
  FiniteSet cut(double alpha) const;

  /// Same universe and same positive grades.
  friend bool operator==(FuzzySet const &, FuzzySet const &) = default;

private:
  RegistryPtr                                 registry_;
  std::vector<std::pair<ElementIndex, double>> grades_;
};

/// {0.1, 0.2, ..., 1.0}.
std::vector<double> default_alpha_grid();

inline constexpr double kDefaultAlphaWeight = 1.0;

/// Distance between the level collections {(A_alpha, alpha)} and
/// {(B_alpha, alpha)} over `grid`, using the level-2 average-metric
/// construction with pair distance f(S, T) + c |alpha - beta|. Levels at
/// which either cut is empty are dropped; DomainError if none remain.
double fuzzy_distance(BaseMetric const &metric, FuzzySet const &a, FuzzySet const &b,
                      std::span<const double> grid, double c = kDefaultAlphaWeight);

}  // namespace setmetric
