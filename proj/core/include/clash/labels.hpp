// Copyright 2026 The Clash Authors
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

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clash {

/// Dense label identifier, assigned in order of first appearance.
using LabelId = std::uint32_t;

/// Sorted, duplicate-free set of label ids.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<LabelId> ids);
  explicit LabelSet(std::vector<LabelId> ids);

  void insert(LabelId id);
  bool contains(LabelId id) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<LabelId>& ids() const { return ids_; }
  /// One past the largest id, 0 when empty.
  std::size_t bound() const { return ids_.empty() ? 0 : ids_.back() + std::size_t{1}; }

  /// Elements of *this not in `other`.
  LabelSet minus(const LabelSet& other) const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<LabelId> ids_;
};

/// Label name <-> dense id mapping.
class LabelDictionary {
 public:
  LabelId intern(std::string_view name);
  std::optional<LabelId> find(std::string_view name) const;
  const std::string& name(LabelId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, LabelId> ids_;
};

}  // namespace clash
