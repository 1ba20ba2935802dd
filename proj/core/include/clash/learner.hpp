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

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "clash/hash_embed.hpp"
#include "clash/labels.hpp"

namespace clash {

enum class LearnerKind { kMode1, kMode2, kPerceptron, kKnn1 };

LearnerKind parse_learner_kind(std::string_view name);
std::string to_string(LearnerKind kind);

/// An online multi-label model driven test-then-train by the stream harness.
/// Models grow their per-label state lazily, on the first update that carries
/// a label, so a run with no training leaves them untouched.
class Learner {
 public:
  virtual ~Learner() = default;

  virtual LearnerKind kind() const = 0;
  virtual std::size_t dim() const = 0;
  virtual LabelSet predict(const HashedVector& v) const = 0;
  /// `predicted` must be this model's prediction for `v` before the update.
  virtual void learn(const HashedVector& v, const LabelSet& predicted, const LabelSet& truth) = 0;
  /// Estimated resident size of the model state.
  virtual std::size_t memory_bytes() const = 0;
  virtual std::unique_ptr<Learner> clone() const = 0;
};

}  // namespace clash
