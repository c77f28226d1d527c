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

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "setmetric/error.hpp"
#include "setmetric/registry.hpp"

namespace setmetric {

/// d(x, y) = 0 if x and y are the same element, lambda otherwise.
struct DiscreteMetric
{
  double lambda = 1.0;
};

struct EuclideanMetric
{
};

/// Minkowski distance of order p >= 1 on payload vectors (p may be +inf).
struct LpMetric
{
  double p = 2.0;
};

/// Explicit symmetric distance table over (a subset of) a registry's ids.
class MatrixMetric
{
public:
  /// `ids[r]` labels row/column r of `table`. The table must be symmetric and
  /// non-negative with a zero diagonal and satisfy the triangle inequality.
  /// Off-diagonal zeros are accepted only when `pseudo` is set.
  /// Throws DomainError describing the first failed check.
  MatrixMetric(RegistryPtr registry, std::vector<std::string> const &ids,
               std::vector<std::vector<double>> const &table, bool pseudo = false);

  bool pseudo() const noexcept { return pseudo_; }
  RegistryPtr const &registry() const noexcept { return registry_; }

  bool covers(ElementIndex i) const noexcept
  {
    return i < slot_.size() && slot_[i] >= 0;
  }

  double at(ElementIndex i, ElementIndex j) const
  {
    return table_[static_cast<std::size_t>(slot_[i]) * n_ + static_cast<std::size_t>(slot_[j])];
  }

private:
  RegistryPtr         registry_;
  std::vector<int>    slot_;
  std::vector<double> table_;
  std::size_t         n_      = 0;
  bool                pseudo_ = false;
};

/// The ground distance d on elements.
class BaseMetric
{
public:
  using Kind = std::variant<DiscreteMetric, EuclideanMetric, LpMetric, MatrixMetric>;

  BaseMetric() = default;
  explicit BaseMetric(Kind kind);

  static BaseMetric discrete(double lambda = 1.0);
  static BaseMetric euclidean();
  static BaseMetric lp(double p);
  static BaseMetric matrix(MatrixMetric table);

  Kind const &kind() const noexcept { return kind_; }

  bool is_discrete() const noexcept { return std::holds_alternative<DiscreteMetric>(kind_); }
  double discrete_lambda() const;

  /// True for the matrix kind flagged as a pseudo-metric.
  bool is_pseudo() const noexcept;

  std::string describe() const;

  /// Checks that every index in `members` can be measured by this metric on
  /// `registry`: ids present in the matrix table, equal payload dimension for
  /// the vector kinds. Throws DomainError otherwise.
  void validate(ElementRegistry const &registry, std::span<const ElementIndex> members) const;

  /// Calls `fn(dist)` with a concrete, inlinable `dist(i, j)` for this kind.
  /// Callers must have validated the indices they will pass to `dist`.
  template <typename Fn>
  decltype(auto) with_distance(ElementRegistry const &registry, Fn &&fn) const
  {
    return std::visit(
        [&](auto const &k) -> decltype(auto) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, DiscreteMetric>)
          {
            double const lambda = k.lambda;
            return fn([lambda](ElementIndex i, ElementIndex j) { return i == j ? 0.0 : lambda; });
          }
          else if constexpr (std::is_same_v<K, EuclideanMetric>)
          {
            return fn([&registry](ElementIndex i, ElementIndex j) {
              auto x = registry.payload(i);
              auto y = registry.payload(j);
              double acc = 0.0;
              for (std::size_t c = 0; c < x.size(); ++c)
              {
                double const diff = x[c] - y[c];
                acc += diff * diff;
              }
              return std::sqrt(acc);
            });
          }
          else if constexpr (std::is_same_v<K, LpMetric>)
          {
            double const p = k.p;
            return fn([&registry, p](ElementIndex i, ElementIndex j) {
              auto x = registry.payload(i);
              auto y = registry.payload(j);
              if (std::isinf(p))
              {
                double m = 0.0;
                for (std::size_t c = 0; c < x.size(); ++c)
                {
                  m = std::max(m, std::abs(x[c] - y[c]));
                }
                return m;
              }
              double acc = 0.0;
              for (std::size_t c = 0; c < x.size(); ++c)
              {
                acc += std::pow(std::abs(x[c] - y[c]), p);
              }
              return std::pow(acc, 1.0 / p);
            });
          }
          else
          {
            return fn([&k](ElementIndex i, ElementIndex j) { return k.at(i, j); });
          }
        },
        kind_);
  }

private:
  Kind kind_{DiscreteMetric{}};
};

/// d(x, y) for two elements of `registry`. Symmetric, zero when x == y.
double base_distance(BaseMetric const &metric, ElementRegistry const &registry, ElementIndex x,
                     ElementIndex y);

}  // namespace setmetric
