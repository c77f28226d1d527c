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

#include <omp.h>

#include <numeric>

#include "setmetric/kernels.hpp"
#include "setmetric/samplers.hpp"

using namespace setmetric;

namespace {

struct Cloud
{
  RegistryPtr               reg;
  std::vector<ElementIndex> rows;
  std::vector<ElementIndex> cols;
};

Cloud cloud(std::size_t n, std::size_t dim, std::uint64_t seed)
{
  auto rng = make_stream(seed, 0);
  Cloud c{samplers::random_points(rng, n, dim), {}, {}};
  for (ElementIndex i = 0; i < n; ++i)
    (i % 3 == 0 ? c.rows : c.cols).push_back(i);
  return c;
}

class ThreadGuard
{
public:
  explicit ThreadGuard(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadGuard() { omp_set_num_threads(saved_); }

private:
  int saved_;
};

}  // namespace

TEST(Kernels, ParallelMatchesSerial)
{
  auto const m = BaseMetric::euclidean();
  auto const c = cloud(1500, 3, 1);
  double const s = kernels::pair_sum_serial(m, *c.reg, c.rows, c.cols);
  double const p = kernels::pair_sum_parallel(m, *c.reg, c.rows, c.cols);
  EXPECT_NEAR(p, s, 1e-12 * s);
  EXPECT_EQ(kernels::min_cross_serial(m, *c.reg, c.rows, c.cols),
            kernels::min_cross_parallel(m, *c.reg, c.rows, c.cols));
  EXPECT_EQ(kernels::directed_hausdorff_serial(m, *c.reg, c.rows, c.cols),
            kernels::directed_hausdorff_parallel(m, *c.reg, c.rows, c.cols));
  EXPECT_EQ(kernels::directed_hausdorff_serial(m, *c.reg, c.cols, c.rows),
            kernels::directed_hausdorff_parallel(m, *c.reg, c.cols, c.rows));
}

TEST(Kernels, ParallelSumIndependentOfThreadCount)
{
  auto const m = BaseMetric::euclidean();
  auto const c = cloud(2000, 2, 2);
  double one;
  {
    ThreadGuard g(1);
    one = kernels::pair_sum_parallel(m, *c.reg, c.rows, c.cols);
  }
  for (int t : {2, 3, 7})
  {
    ThreadGuard g(t);
    EXPECT_EQ(kernels::pair_sum_parallel(m, *c.reg, c.rows, c.cols), one) << t << " threads";
    EXPECT_EQ(kernels::pair_sum(m, *c.reg, c.rows, c.cols), one) << t << " threads";
  }
}

TEST(Kernels, EmptyRangesSumToZero)
{
  auto const m = BaseMetric::euclidean();
  auto const c = cloud(10, 2, 3);
  std::vector<ElementIndex> none;
  EXPECT_EQ(kernels::pair_sum(m, *c.reg, none, c.cols), 0.0);
  EXPECT_EQ(kernels::pair_sum_parallel(m, *c.reg, c.rows, none), 0.0);
}

TEST(Kernels, SmallInputsAgreeExactly)
{
  auto const m = BaseMetric::discrete(1.0);
  auto const c = cloud(40, 2, 4);
  EXPECT_EQ(kernels::pair_sum_serial(m, *c.reg, c.rows, c.cols),
            kernels::pair_sum(m, *c.reg, c.rows, c.cols));
  EXPECT_EQ(kernels::pair_sum(m, *c.reg, c.rows, c.cols), double(c.rows.size() * c.cols.size()));
}
