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

#include <array>
#include <cstddef>

#include "setmetric/continuous.hpp"
#include "setmetric/hierarchy.hpp"
#include "setmetric/random.hpp"
#include "setmetric/registry.hpp"

// Random inputs for the axiom checker and the verification suites. Every
// generator draws only from the Rng it is given.
namespace setmetric::samplers {

/// n points uniform in [0, 1]^dim with ids "p0", "p1", ...
RegistryPtr random_points(Rng &rng, std::size_t n, std::size_t dim);

/// n payload-free elements with ids "e0", "e1", ... (for discrete metrics).
RegistryPtr tokens(std::size_t n);

struct SetShape
{
  std::size_t pool     = 12;  // elements to draw the sets from
  std::size_t min_size = 1;
  std::size_t max_size = 8;
  std::size_t dim      = 2;
};

/// A uniformly sized random subset of `registry` (no repeats).
FiniteSet random_subset(Rng &rng, RegistryPtr const &registry, std::size_t min_size,
                        std::size_t max_size);

/// Each element kept with probability 1/2, redrawn until non-empty.
FiniteSet bernoulli_subset(Rng &rng, RegistryPtr const &registry);

/// Three subsets of a fresh pool of random points in [0, 1]^dim.
std::array<FiniteSet, 3> point_set_triple(Rng &rng, SetShape const &shape = {});

/// Three subsets of an existing registry.
std::array<FiniteSet, 3> subset_triple(Rng &rng, RegistryPtr const &registry, std::size_t min_size,
                                       std::size_t max_size);

/// A = delta u eta, B = delta u eta u eps, C = eta u eps for non-empty,
/// pairwise disjoint random point sets delta, eps, eta.
struct SemiMetricCounterexample
{
  FiniteSet delta;
  FiniteSet eps;
  FiniteSet eta;
  FiniteSet a;
  FiniteSet b;
  FiniteSet c;
};

SemiMetricCounterexample semi_metric_counterexample(Rng &rng, std::size_t dim = 2);

/// Random interval triples mixing nested, overlapping, disjoint and
/// shared-endpoint configurations.
Interval random_interval(Rng &rng);
std::array<Interval, 3> interval_triple(Rng &rng);
std::array<Interval, 2> interval_pair_case(Rng &rng, std::size_t case_index);

/// Three level-2 collections over a fresh pool of points in [0, 1]^2: inner
/// sets have 1-4 elements, collections 1-4 inner sets drawn from a shared
/// pool so that they overlap.
struct NestedTriple
{
  RegistryPtr              registry;
  std::array<NestedSet, 3> sets;
};

NestedTriple nested_triple(Rng &rng);

/// Random grades over `registry`, at least one positive.
FuzzySet random_fuzzy(Rng &rng, RegistryPtr const &registry);

}  // namespace setmetric::samplers
