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
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace setmetric {

using ElementIndex = std::uint32_t;

/// Append-only table of elements. Each element has an opaque string id and a
/// real-vector payload (possibly empty for discrete or matrix metrics).
///
/// Identity is the id: two distinct ids are distinct elements even when their
/// payloads coincide. Once shared between sets the registry is treated as
/// read-only.
class ElementRegistry
{
public:
  ElementRegistry() = default;

  /// Registers `id` with `payload`. Throws DomainError if `id` is taken.
  ElementIndex add(std::string id, std::span<const double> payload = {});
  ElementIndex add(std::string id, std::initializer_list<double> payload)
  {
    return add(std::move(id), std::span<const double>(payload.begin(), payload.size()));
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool contains(std::string_view id) const;

  /// Throws DomainError for an unknown id.
  ElementIndex index_of(std::string_view id) const;

  std::string const &id(ElementIndex i) const { return ids_.at(i); }

  std::span<const double> payload(ElementIndex i) const
  {
    return {coords_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  std::size_t dimension(ElementIndex i) const { return offsets_[i + 1] - offsets_[i]; }

private:
  std::vector<std::string>                      ids_;
  std::unordered_map<std::string, ElementIndex> lookup_;
  std::vector<double>                           coords_;
  std::vector<std::size_t>                      offsets_{0};
};

using RegistryPtr = std::shared_ptr<const ElementRegistry>;

/// A finite set of elements of one registry. Members are kept sorted by
/// registry index with duplicates removed, so equal membership compares equal.
/// The empty set is representable (set algebra produces it); metric operations
/// reject it.
class FiniteSet
{
public:
  FiniteSet() = default;
  FiniteSet(RegistryPtr registry, std::vector<ElementIndex> members);

  /// Resolves ids through the registry; duplicates are dropped.
  static FiniteSet from_ids(RegistryPtr registry, std::span<const std::string> ids);
  static FiniteSet from_ids(RegistryPtr registry, std::initializer_list<std::string_view> ids);

  RegistryPtr const &registry() const noexcept { return registry_; }
  std::span<const ElementIndex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(ElementIndex i) const;

  std::vector<std::string> ids() const;

  friend bool operator==(FiniteSet const &a, FiniteSet const &b)
  {
    return a.registry_ == b.registry_ && a.members_ == b.members_;
  }

private:
  RegistryPtr               registry_;
  std::vector<ElementIndex> members_;
};

// Set algebra by element identity. Both operands must share a registry.
FiniteSet set_union(FiniteSet const &a, FiniteSet const &b);
FiniteSet set_intersection(FiniteSet const &a, FiniteSet const &b);
FiniteSet set_difference(FiniteSet const &a, FiniteSet const &b);
FiniteSet set_symmetric_difference(FiniteSet const &a, FiniteSet const &b);

/// Throws DomainError when the two sets index different registries.
void require_same_registry(FiniteSet const &a, FiniteSet const &b);

}  // namespace setmetric
