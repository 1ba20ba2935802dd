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
#include <vector>

#include "clash/labels.hpp"

namespace clash {

struct Confusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct Summary {
  double macro_p = 0, macro_r = 0, macro_f1 = 0;
  double micro_p = 0, micro_r = 0, micro_f1 = 0;
  double accuracy = 0;
};

/// Cumulative per-label confusion tallies. A label first seen after some
/// rounds starts with tn equal to the rounds already recorded, so every row
/// always sums to rounds().
class LabelCounters {
 public:
  void ensure_labels(std::size_t labels);
  /// One evaluated document; call before the learner sees its labels.
  void record(const LabelSet& predicted, const LabelSet& truth);

  std::uint64_t rounds() const { return rounds_; }
  std::size_t labels() const { return per_label_.size(); }
  const Confusion& at(LabelId j) const { return per_label_.at(j); }
  const std::vector<Confusion>& per_label() const { return per_label_; }

  /// Restores persisted counters.
  void restore(std::vector<Confusion> per_label, std::uint64_t rounds);

  friend bool operator==(const LabelCounters&, const LabelCounters&) = default;

 private:
  std::vector<Confusion> per_label_;
  std::uint64_t rounds_ = 0;
};

/// P = tp/(tp+fp), R = tp/(tp+fn), F1 = 2tp/(2tp+fp+fn); an undefined ratio is 0.
double precision(const Confusion& c);
double recall(const Confusion& c);
double f1(const Confusion& c);

/// Throws ContractViolation when no round has been recorded.
Summary summarize(const LabelCounters& counters);

}  // namespace clash
