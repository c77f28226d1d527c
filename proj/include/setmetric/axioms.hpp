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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "setmetric/error.hpp"
#include "setmetric/random.hpp"

namespace setmetric {

enum class Axiom
{
  M1,         // d(a,b) >= 0
  M2,         // d(a,a) = 0
  M3,         // d(a,b) = 0 => a = b
  M4,         // d(a,b) = d(b,a)
  M5,         // d(a,b) + d(b,c) >= d(a,c)
  PartialM5,  // d(a,b) + d(b,c) >= d(a,c) + d(b,b)
};

std::string_view axiom_name(Axiom axiom) noexcept;

using AxiomMask = unsigned;

constexpr AxiomMask bit(Axiom a) noexcept
{
  return 1u << static_cast<unsigned>(a);
}

inline constexpr AxiomMask kMetricAxioms =
    bit(Axiom::M1) | bit(Axiom::M2) | bit(Axiom::M3) | bit(Axiom::M4) | bit(Axiom::M5);
inline constexpr AxiomMask kSemiMetricAxioms =
    bit(Axiom::M1) | bit(Axiom::M2) | bit(Axiom::M3) | bit(Axiom::M4);
inline constexpr AxiomMask kPseudoMetricAxioms =
    bit(Axiom::M1) | bit(Axiom::M2) | bit(Axiom::M4) | bit(Axiom::M5);
inline constexpr AxiomMask kPartialMetricAxioms =
    bit(Axiom::M1) | bit(Axiom::M3) | bit(Axiom::M4) | bit(Axiom::PartialM5);

template <typename T>
struct AxiomViolation
{
  Axiom          axiom;
  std::vector<T> witness;  // pair or ordered triple; for M5 the middle point is second
  double         magnitude;
};

template <typename T>
struct AxiomReport
{
  std::size_t                    checked   = 0;
  double                         tolerance = 0.0;
  std::vector<AxiomViolation<T>> violations;

  bool clean() const noexcept { return violations.empty(); }

  std::size_t count(Axiom a) const noexcept
  {
    std::size_t n = 0;
    for (auto const &v : violations)
    {
      n += v.axiom == a ? 1 : 0;
    }
    return n;
  }

  double max_magnitude(Axiom a) const noexcept
  {
    double m = 0.0;
    for (auto const &v : violations)
    {
      if (v.axiom == a)
      {
        m = std::max(m, v.magnitude);
      }
    }
    return m;
  }
};

struct AxiomCheckOptions
{
  std::size_t   n         = 1000;
  std::uint64_t seed      = 0;
  double        tolerance = 1e-9;
  AxiomMask     axioms    = kMetricAxioms;
};

namespace detail {

// Evaluates the selected axioms on one sampled triple (a, b, c). Pair axioms
// run on all three pairs, triangle forms on all three choices of middle point.
template <typename T, typename Dist>
void check_triple(Dist &dist, std::array<T, 3> const &tri, AxiomCheckOptions const &opt,
                  std::vector<AxiomViolation<T>> &out)
{
  double const tol = opt.tolerance;
  auto const   on  = [&](Axiom a) { return (opt.axioms & bit(a)) != 0; };
  auto const   report = [&](Axiom a, std::vector<T> witness, double magnitude) {
    if (!(magnitude <= tol))
    {
      out.push_back({a, std::move(witness), std::isnan(magnitude) ? std::numeric_limits<double>::infinity() : magnitude});
    }
  };

  std::array<std::array<std::optional<double>, 3>, 3> memo{};
  auto d = [&](std::size_t i, std::size_t j) {
    auto &slot = memo[i][j];
    if (!slot)
    {
      slot = static_cast<double>(dist(tri[i], tri[j]));
    }
    return *slot;
  };

  constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
  for (auto [i, j] : pairs)
  {
    if (on(Axiom::M1))
    {
      double const v = d(i, j);
      report(Axiom::M1, {tri[i], tri[j]}, std::isfinite(v) ? -v : std::numeric_limits<double>::infinity());
    }
    if (on(Axiom::M3) && d(i, j) <= tol && !(tri[i] == tri[j]))
    {
      report(Axiom::M3, {tri[i], tri[j]}, 1.0);
    }
    if (on(Axiom::M4))
    {
      report(Axiom::M4, {tri[i], tri[j]}, std::abs(d(i, j) - d(j, i)));
    }
  }
  if (on(Axiom::M2))
  {
    for (std::size_t i = 0; i < 3; ++i)
    {
      report(Axiom::M2, {tri[i], tri[i]}, std::abs(d(i, i)));
    }
  }
  // (first, middle, last)
  constexpr std::array<std::array<std::size_t, 3>, 3> paths{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}}};
  for (auto [u, m, w] : paths)
  {
    if (on(Axiom::M5))
    {
      report(Axiom::M5, {tri[u], tri[m], tri[w]}, d(u, w) - d(u, m) - d(m, w));
    }
    if (on(Axiom::PartialM5))
    {
      report(Axiom::PartialM5, {tri[u], tri[m], tri[w]}, d(u, w) + d(m, m) - d(u, m) - d(m, w));
    }
  }
}

inline void require_count(AxiomCheckOptions const &opt)
{
  if (opt.n == 0)
  {
    throw InvalidParameter("check_axioms: n must be at least 1");
  }
}

}  // namespace detail

/// Samples `opt.n` triples and records every axiom violation larger than
/// `opt.tolerance`.
///
/// `sampler(rng)` returns `std::optional<std::array<T, 3>>`; an empty optional
/// means the sampler is exhausted and raises DomainError. Tuple i is drawn from
/// its own stream seeded by (opt.seed, i), so the report depends only on the
/// seed. T needs `operator==` for the M3 check.
template <typename T, typename Dist, typename Sampler>
AxiomReport<T> check_axioms_serial(Dist &&dist, Sampler &&sampler, AxiomCheckOptions const &opt)
{
  detail::require_count(opt);
  AxiomReport<T> report;
  report.checked   = opt.n;
  report.tolerance = opt.tolerance;
  for (std::size_t i = 0; i < opt.n; ++i)
  {
    auto rng = make_stream(opt.seed, i);
    std::optional<std::array<T, 3>> tri = sampler(rng);
    if (!tri)
    {
      throw DomainError("check_axioms: sampler exhausted after " + std::to_string(i) + " tuples");
    }
    detail::check_triple(dist, *tri, opt, report.violations);
  }
  return report;
}

/// OpenMP version of check_axioms_serial; produces the identical report.
/// `dist` and `sampler` must be safe to call concurrently.
template <typename T, typename Dist, typename Sampler>
AxiomReport<T> check_axioms(Dist &&dist, Sampler &&sampler, AxiomCheckOptions const &opt)
{
  detail::require_count(opt);
  auto const n = static_cast<std::ptrdiff_t>(opt.n);
  std::vector<std::vector<AxiomViolation<T>>> found(opt.n);
  std::vector<std::exception_ptr>             errors(opt.n);
  std::vector<char>                           exhausted(opt.n, 0);

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i)
  {
    auto const k = static_cast<std::size_t>(i);
    try
    {
      auto rng = make_stream(opt.seed, k);
      std::optional<std::array<T, 3>> tri = sampler(rng);
      if (!tri)
      {
        exhausted[k] = 1;
        continue;
      }
      detail::check_triple(dist, *tri, opt, found[k]);
    }
    catch (...)
    {
      errors[k] = std::current_exception();
    }
  }

  AxiomReport<T> report;
  report.checked   = opt.n;
  report.tolerance = opt.tolerance;
  for (std::size_t k = 0; k < opt.n; ++k)
  {
    if (exhausted[k])
    {
      throw DomainError("check_axioms: sampler exhausted after " + std::to_string(k) + " tuples");
    }
    if (errors[k])
    {
      std::rethrow_exception(errors[k]);
    }
    for (auto &v : found[k])
    {
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace setmetric
