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

#include "clash/metrics.hpp"

#include <algorithm>

#include "clash/errors.hpp"

namespace clash {

namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void LabelCounters::ensure_labels(std::size_t labels) {
  while (per_label_.size() < labels) {
    Confusion c;
    c.tn = rounds_;
    per_label_.push_back(c);
  }
}

void LabelCounters::record(const LabelSet& predicted, const LabelSet& truth) {
  ensure_labels(std::max(predicted.bound(), truth.bound()));
  for (std::size_t j = 0; j < per_label_.size(); ++j) {
    const auto id = static_cast<LabelId>(j);
    const bool p = predicted.contains(id);
    const bool t = truth.contains(id);
    Confusion& c = per_label_[j];
    if (p && t) {
      ++c.tp;
    } else if (p) {
      ++c.fp;
    } else if (t) {
      ++c.fn;
    } else {
      ++c.tn;
    }
  }
  ++rounds_;
}

void LabelCounters::restore(std::vector<Confusion> per_label, std::uint64_t rounds) {
  for (const auto& c : per_label) {
    if (c.total() != rounds) throw FormatError("label counters do not sum to the round count");
  }
  per_label_ = std::move(per_label);
  rounds_ = rounds;
}

double precision(const Confusion& c) { return ratio(c.tp, c.tp + c.fp); }
double recall(const Confusion& c) { return ratio(c.tp, c.tp + c.fn); }
double f1(const Confusion& c) { return ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn); }

Summary summarize(const LabelCounters& counters) {
  if (counters.rounds() == 0) throw ContractViolation("summarize needs at least one round");
  Summary s;
  Confusion pooled;
  for (const auto& c : counters.per_label()) {
    s.macro_p += precision(c);
    s.macro_r += recall(c);
    s.macro_f1 += f1(c);
    pooled.tp += c.tp;
    pooled.fp += c.fp;
    pooled.fn += c.fn;
    pooled.tn += c.tn;
  }
  if (const auto n = counters.labels(); n > 0) {
    s.macro_p /= static_cast<double>(n);
    s.macro_r /= static_cast<double>(n);
    s.macro_f1 /= static_cast<double>(n);
  }
  s.micro_p = precision(pooled);
  s.micro_r = recall(pooled);
  s.micro_f1 = f1(pooled);
  s.accuracy = ratio(pooled.tp + pooled.tn, pooled.total());
  return s;
}

}  // namespace clash
