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
#include <span>

#include "setmetric/base_metric.hpp"
#include "setmetric/registry.hpp"

// Cross-distance reductions over two index ranges. Each reduction exists as a
// plain serial loop (kept as the reference) and an OpenMP version. The
// parallel sum splits rows into fixed blocks and adds the block partials in
// block order, so its result does not depend on the thread count.
//
// None of these validate their inputs; callers run BaseMetric::validate first.
namespace setmetric::kernels {

/// Row block used by pair_sum_parallel. Part of the summation order.
inline constexpr std::size_t kRowBlock = 32;

/// Below this many cross pairs the dispatching entry points stay serial.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// sum_{a in rows} sum_{b in cols} d(a, b); zero when either range is empty.
double pair_sum_serial(BaseMetric const &metric, ElementRegistry const &registry,
                       std::span<const ElementIndex> rows, std::span<const ElementIndex> cols);
double pair_sum_parallel(BaseMetric const &metric, ElementRegistry const &registry,
                         std::span<const ElementIndex> rows, std::span<const ElementIndex> cols);
double pair_sum(BaseMetric const &metric, ElementRegistry const &registry,
                std::span<const ElementIndex> rows, std::span<const ElementIndex> cols);

/// min_{a, b} d(a, b). Both ranges must be non-empty.
double min_cross_serial(BaseMetric const &metric, ElementRegistry const &registry,
                        std::span<const ElementIndex> rows, std::span<const ElementIndex> cols);
double min_cross_parallel(BaseMetric const &metric, ElementRegistry const &registry,
                          std::span<const ElementIndex> rows, std::span<const ElementIndex> cols);
double min_cross(BaseMetric const &metric, ElementRegistry const &registry,
                 std::span<const ElementIndex> rows, std::span<const ElementIndex> cols);

/// max_{a in rows} min_{b in cols} d(a, b). Both ranges must be non-empty.
double directed_hausdorff_serial(BaseMetric const &metric, ElementRegistry const &registry,
                                 std::span<const ElementIndex> rows,
                                 std::span<const ElementIndex> cols);
double directed_hausdorff_parallel(BaseMetric const &metric, ElementRegistry const &registry,
                                   std::span<const ElementIndex> rows,
                                   std::span<const ElementIndex> cols);
double directed_hausdorff(BaseMetric const &metric, ElementRegistry const &registry,
                          std::span<const ElementIndex> rows, std::span<const ElementIndex> cols);

}  // namespace setmetric::kernels
