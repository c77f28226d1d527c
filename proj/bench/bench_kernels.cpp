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

#include <benchmark/benchmark.h>

#include "setmetric/axioms.hpp"
#include "setmetric/core_metrics.hpp"
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

Cloud cloud(std::size_t n)
{
  auto  rng = make_stream(1, 0);
  Cloud c{samplers::random_points(rng, 2 * n, 3), {}, {}};
  for (ElementIndex i = 0; i < 2 * n; ++i)
    (i < n ? c.rows : c.cols).push_back(i);
  return c;
}

template <double (*Kernel)(BaseMetric const &, ElementRegistry const &, std::span<const ElementIndex>,
                           std::span<const ElementIndex>)>
void run_kernel(benchmark::State &state)
{
  auto const m = BaseMetric::euclidean();
  auto const c = cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(m, *c.reg, c.rows, c.cols));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <bool Parallel>
void axiom_check(benchmark::State &state)
{
  auto const        m = BaseMetric::euclidean();
  AxiomCheckOptions opt;
  opt.n     = static_cast<std::size_t>(state.range(0));
  auto dist = [&](FiniteSet const &a, FiniteSet const &b) { return average_metric(m, a, b); };
  auto draw = [](Rng &rng) -> std::optional<std::array<FiniteSet, 3>> {
    return samplers::point_set_triple(rng, {64, 8, 48, 3});
  };
  for (auto _ : state)
  {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(check_axioms<FiniteSet>(dist, draw, opt).violations.size());
    else
      benchmark::DoNotOptimize(check_axioms_serial<FiniteSet>(dist, draw, opt).violations.size());
  }
}

}  // namespace

BENCHMARK(run_kernel<kernels::pair_sum_serial>)->Name("pair_sum/serial")->Arg(256)->Arg(2048);
BENCHMARK(run_kernel<kernels::pair_sum_parallel>)->Name("pair_sum/parallel")->Arg(256)->Arg(2048)->UseRealTime();
BENCHMARK(run_kernel<kernels::directed_hausdorff_serial>)->Name("hausdorff/serial")->Arg(256)->Arg(2048);
BENCHMARK(run_kernel<kernels::directed_hausdorff_parallel>)
    ->Name("hausdorff/parallel")
    ->Arg(256)
    ->Arg(2048)
    ->UseRealTime();
BENCHMARK(axiom_check<false>)->Name("check_axioms/serial")->Arg(1000);
BENCHMARK(axiom_check<true>)->Name("check_axioms/parallel")->Arg(1000)->UseRealTime();

BENCHMARK_MAIN();
