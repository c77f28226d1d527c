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

#include "setmetric/base_metric.hpp"

#include <algorithm>
#include <sstream>

namespace setmetric {

namespace {

constexpr double kTableTolerance = 1e-9;

}  // namespace

MatrixMetric::MatrixMetric(RegistryPtr registry, std::vector<std::string> const &ids,
                           std::vector<std::vector<double>> const &table, bool pseudo)
  : registry_(std::move(registry))
  , n_(ids.size())
  , pseudo_(pseudo)
{
  if (!registry_)
  {
    throw DomainError("matrix metric requires a registry");
  }
  if (table.size() != n_)
  {
    throw DomainError("matrix metric: table has " + std::to_string(table.size()) +
                      " rows for " + std::to_string(n_) + " ids");
  }
  slot_.assign(registry_->size(), -1);
  for (std::size_t r = 0; r < n_; ++r)
  {
    auto const idx = registry_->index_of(ids[r]);
    if (slot_[idx] >= 0)
    {
      throw DomainError("matrix metric: id '" + ids[r] + "' listed twice");
    }
    slot_[idx] = static_cast<int>(r);
    if (table[r].size() != n_)
    {
      throw DomainError("matrix metric: row '" + ids[r] + "' has wrong length");
    }
  }
  table_.resize(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r)
  {
    std::copy(table[r].begin(), table[r].end(), table_.begin() + static_cast<std::ptrdiff_t>(r * n_));
  }

  auto cell = [&](std::size_t r, std::size_t c) { return table_[r * n_ + c]; };
  auto fail = [&](std::string const &axiom, std::string const &detail) {
    throw DomainError("matrix metric fails " + axiom + ": " + detail);
  };
  for (std::size_t r = 0; r < n_; ++r)
  {
    if (std::abs(cell(r, r)) > kTableTolerance)
    {
      fail("M2", "d(" + ids[r] + "," + ids[r] + ") != 0");
    }
    for (std::size_t c = 0; c < n_; ++c)
    {
      if (!std::isfinite(cell(r, c)) || cell(r, c) < -kTableTolerance)
      {
        fail("M1", "d(" + ids[r] + "," + ids[c] + ") is negative or not finite");
      }
      if (std::abs(cell(r, c) - cell(c, r)) > kTableTolerance)
      {
        fail("M4", "d(" + ids[r] + "," + ids[c] + ") != d(" + ids[c] + "," + ids[r] + ")");
      }
      if (r != c && !pseudo_ && cell(r, c) <= kTableTolerance)
      {
        fail("M3", "d(" + ids[r] + "," + ids[c] + ") = 0 for distinct ids (flag as pseudo to allow)");
      }
    }
  }
  for (std::size_t a = 0; a < n_; ++a)
  {
    for (std::size_t b = 0; b < n_; ++b)
    {
      for (std::size_t c = 0; c < n_; ++c)
      {
        if (cell(a, b) + cell(b, c) < cell(a, c) - kTableTolerance)
        {
          fail("M5", "d(" + ids[a] + "," + ids[b] + ") + d(" + ids[b] + "," + ids[c] + ") < d(" +
                         ids[a] + "," + ids[c] + ")");
        }
      }
    }
  }
}

BaseMetric::BaseMetric(Kind kind)
  : kind_(std::move(kind))
{}

BaseMetric BaseMetric::discrete(double lambda)
{
  if (!(lambda > 0.0) || !std::isfinite(lambda))
  {
    throw InvalidParameter("discrete metric scale must be a positive finite real");
  }
  return BaseMetric(DiscreteMetric{lambda});
}

BaseMetric BaseMetric::euclidean()
{
  return BaseMetric(EuclideanMetric{});
}

BaseMetric BaseMetric::lp(double p)
{
  if (!(p >= 1.0))
  {
    throw InvalidParameter("L_p metric requires p >= 1");
  }
  return BaseMetric(LpMetric{p});
}

BaseMetric BaseMetric::matrix(MatrixMetric table)
{
  return BaseMetric(std::move(table));
}

double BaseMetric::discrete_lambda() const
{
  if (auto const *d = std::get_if<DiscreteMetric>(&kind_))
  {
    return d->lambda;
  }
  throw DomainError("base metric is not discrete");
}

bool BaseMetric::is_pseudo() const noexcept
{
  auto const *m = std::get_if<MatrixMetric>(&kind_);
  return m != nullptr && m->pseudo();
}

std::string BaseMetric::describe() const
{
  std::ostringstream os;
  std::visit(
      [&](auto const &k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, DiscreteMetric>)
          os << "discrete(lambda=" << k.lambda << ")";
        else if constexpr (std::is_same_v<K, EuclideanMetric>)
          os << "euclidean";
        else if constexpr (std::is_same_v<K, LpMetric>)
          os << "lp(p=" << k.p << ")";
        else
          os << (k.pseudo() ? "matrix(pseudo)" : "matrix");
      },
      kind_);
  return os.str();
}

void BaseMetric::validate(ElementRegistry const &registry, std::span<const ElementIndex> members) const
{
  std::visit(
      [&](auto const &k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, MatrixMetric>)
        {
          if (k.registry().get() != &registry)
          {
            throw DomainError("matrix metric is bound to a different element registry");
          }
          for (auto m : members)
          {
            if (!k.covers(m))
            {
              throw DomainError("unknown id '" + registry.id(m) + "' in matrix metric");
            }
          }
        }
        else if constexpr (std::is_same_v<K, EuclideanMetric> || std::is_same_v<K, LpMetric>)
        {
          if (members.empty())
          {
            return;
          }
          auto const dim = registry.dimension(members.front());
          for (auto m : members)
          {
            if (registry.dimension(m) != dim)
            {
              throw DomainError("dimension mismatch: '" + registry.id(m) + "' has dimension " +
                                std::to_string(registry.dimension(m)) + ", expected " +
                                std::to_string(dim));
            }
          }
        }
      },
      kind_);
}

double base_distance(BaseMetric const &metric, ElementRegistry const &registry, ElementIndex x,
                     ElementIndex y)
{
  if (x >= registry.size() || y >= registry.size())
  {
    throw DomainError("element index outside registry");
  }
  ElementIndex const pair[2] = {x, y};
  metric.validate(registry, pair);
  return metric.with_distance(registry, [&](auto dist) { return dist(x, y); });
}

}  // namespace setmetric
