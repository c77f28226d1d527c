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

#include "setmetric/kernels.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace setmetric::kernels {

namespace {

bool worth_parallel(std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  return rows.size() * cols.size() >= kParallelThreshold && rows.size() > kRowBlock;
}

}  // namespace

double pair_sum_serial(BaseMetric const &metric, ElementRegistry const &registry,
                       std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  return metric.with_distance(registry, [&](auto dist) {
    double total = 0.0;
    for (auto a : rows)
    {
      for (auto b : cols)
      {
        total += dist(a, b);
      }
    }
    return total;
  });
}

double pair_sum_parallel(BaseMetric const &metric, ElementRegistry const &registry,
                         std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  auto const n_rows   = static_cast<std::ptrdiff_t>(rows.size());
  auto const n_blocks = (n_rows + static_cast<std::ptrdiff_t>(kRowBlock) - 1) /
                        static_cast<std::ptrdiff_t>(kRowBlock);
  std::vector<double> partial(static_cast<std::size_t>(n_blocks), 0.0);

  metric.with_distance(registry, [&](auto dist) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t block = 0; block < n_blocks; ++block)
    {
      auto const begin = block * static_cast<std::ptrdiff_t>(kRowBlock);
      auto const end   = std::min(n_rows, begin + static_cast<std::ptrdiff_t>(kRowBlock));
      double     acc   = 0.0;
      for (auto r = begin; r < end; ++r)
      {
        auto const a = rows[static_cast<std::size_t>(r)];
        for (auto b : cols)
        {
          acc += dist(a, b);
        }
      }
      partial[static_cast<std::size_t>(block)] = acc;
    }
    return 0;
  });

  double total = 0.0;
  for (double p : partial)
  {
    total += p;
  }
  return total;
}

double pair_sum(BaseMetric const &metric, ElementRegistry const &registry,
                std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  return worth_parallel(rows, cols) ? pair_sum_parallel(metric, registry, rows, cols)
                                    : pair_sum_serial(metric, registry, rows, cols);
}

double min_cross_serial(BaseMetric const &metric, ElementRegistry const &registry,
                        std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  return metric.with_distance(registry, [&](auto dist) {
    double best = std::numeric_limits<double>::infinity();
    for (auto a : rows)
    {
      for (auto b : cols)
      {
        best = std::min(best, dist(a, b));
      }
    }
    return best;
  });
}

double min_cross_parallel(BaseMetric const &metric, ElementRegistry const &registry,
                          std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  auto const n_rows = static_cast<std::ptrdiff_t>(rows.size());
  return metric.with_distance(registry, [&](auto dist) {
    double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::ptrdiff_t r = 0; r < n_rows; ++r)
    {
      auto const a = rows[static_cast<std::size_t>(r)];
      for (auto b : cols)
      {
        best = std::min(best, dist(a, b));
      }
    }
    return best;
  });
}

double min_cross(BaseMetric const &metric, ElementRegistry const &registry,
                 std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  return worth_parallel(rows, cols) ? min_cross_parallel(metric, registry, rows, cols)
                                    : min_cross_serial(metric, registry, rows, cols);
}

double directed_hausdorff_serial(BaseMetric const &metric, ElementRegistry const &registry,
                                 std::span<const ElementIndex> rows,
                                 std::span<const ElementIndex> cols)
{
  return metric.with_distance(registry, [&](auto dist) {
    double worst = 0.0;
    for (auto a : rows)
    {
      double nearest = std::numeric_limits<double>::infinity();
      for (auto b : cols)
      {
        nearest = std::min(nearest, dist(a, b));
      }
      worst = std::max(worst, nearest);
    }
    return worst;
  });
}

double directed_hausdorff_parallel(BaseMetric const &metric, ElementRegistry const &registry,
                                   std::span<const ElementIndex> rows,
                                   std::span<const ElementIndex> cols)
{
  auto const n_rows = static_cast<std::ptrdiff_t>(rows.size());
  return metric.with_distance(registry, [&](auto dist) {
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::ptrdiff_t r = 0; r < n_rows; ++r)
    {
      auto const a       = rows[static_cast<std::size_t>(r)];
      double     nearest = std::numeric_limits<double>::infinity();
      for (auto b : cols)
      {
        nearest = std::min(nearest, dist(a, b));
      }
      worst = std::max(worst, nearest);
    }
    return worst;
  });
}

double directed_hausdorff(BaseMetric const &metric, ElementRegistry const &registry,
                          std::span<const ElementIndex> rows, std::span<const ElementIndex> cols)
{
  return worth_parallel(rows, cols) ? directed_hausdorff_parallel(metric, registry, rows, cols)
                                    : directed_hausdorff_serial(metric, registry, rows, cols);
}

}  // namespace setmetric::kernels
