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

#include "setmetric/registry.hpp"

#include <algorithm>
#include <iterator>

#include "setmetric/error.hpp"

namespace setmetric {

ElementIndex ElementRegistry::add(std::string id, std::span<const double> payload)
{
  if (lookup_.contains(id))
  {
    throw DomainError("duplicate element id '" + id + "'");
  }
  auto const index = static_cast<ElementIndex>(ids_.size());
  lookup_.emplace(id, index);
  ids_.push_back(std::move(id));
  coords_.insert(coords_.end(), payload.begin(), payload.end());
  offsets_.push_back(coords_.size());
  return index;
}

bool ElementRegistry::contains(std::string_view id) const
{
  return lookup_.find(std::string(id)) != lookup_.end();
}

ElementIndex ElementRegistry::index_of(std::string_view id) const
{
  auto it = lookup_.find(std::string(id));
  if (it == lookup_.end())
  {
    throw DomainError("unknown element id '" + std::string(id) + "'");
  }
  return it->second;
}

FiniteSet::FiniteSet(RegistryPtr registry, std::vector<ElementIndex> members)
  : registry_(std::move(registry))
  , members_(std::move(members))
{
  if (!registry_)
  {
    throw DomainError("finite set requires a registry");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= registry_->size())
  {
    throw DomainError("finite set member outside its registry");
  }
}

FiniteSet FiniteSet::from_ids(RegistryPtr registry, std::span<const std::string> ids)
{
  std::vector<ElementIndex> members;
  members.reserve(ids.size());
  for (auto const &id : ids)
  {
    members.push_back(registry->index_of(id));
  }
  return {std::move(registry), std::move(members)};
}

FiniteSet FiniteSet::from_ids(RegistryPtr registry, std::initializer_list<std::string_view> ids)
{
  std::vector<std::string> owned(ids.begin(), ids.end());
  return from_ids(std::move(registry), owned);
}

bool FiniteSet::contains(ElementIndex i) const
{
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::vector<std::string> FiniteSet::ids() const
{
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (auto m : members_)
  {
    out.push_back(registry_->id(m));
  }
  return out;
}

void require_same_registry(FiniteSet const &a, FiniteSet const &b)
{
  if (a.registry() != b.registry())
  {
    throw DomainError("sets belong to different element registries");
  }
}

namespace {

template <typename Op>
FiniteSet combine(FiniteSet const &a, FiniteSet const &b, Op op)
{
  require_same_registry(a, b);
  std::vector<ElementIndex> out;
  out.reserve(a.size() + b.size());
  op(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
     std::back_inserter(out));
  return {a.registry(), std::move(out)};
}

}  // namespace

FiniteSet set_union(FiniteSet const &a, FiniteSet const &b)
{
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}

FiniteSet set_intersection(FiniteSet const &a, FiniteSet const &b)
{
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}

FiniteSet set_difference(FiniteSet const &a, FiniteSet const &b)
{
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}

FiniteSet set_symmetric_difference(FiniteSet const &a, FiniteSet const &b)
{
  return combine(a, b, [](auto... args) { return std::set_symmetric_difference(args...); });
}

}  // namespace setmetric
