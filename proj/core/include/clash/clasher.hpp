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

// Nearest-prototype multi-label classifier.
//
// Each label owns one region, represented by a prototype vector and a row of
// label statistics: stats[j] estimates the probability that a document
// falling in the region carries label j. A document is mapped to the region
// with the nearest trained prototype and receives every label whose statistic
// in that region exceeds theta. Prototypes are running means updated with
// step 1/n; the statistics follow the same recursion.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "clash/hash_embed.hpp"
#include "clash/labels.hpp"
#include "clash/learner.hpp"

namespace clash {

enum class Similarity {
  kSquaredDistance,  // nearest prototype
  kDot,              // largest inner product
};

struct ClasherOptions {
  double theta = 0.5;
  bool mode2 = false;
  Similarity similarity = Similarity::kSquaredDistance;
  /// Mode 2 only: skip the second update a false-negative label would get
  /// from the full Mode-1 sweep triggered by a false positive.
  bool dedupe = false;
};

struct Region {
  HashedVector prototype;
  std::uint64_t count = 0;
  std::vector<double> stats;

  bool trained() const { return count >= 1; }
};

/// Applies one step of the co-occurrence recursion to every known label:
/// stats[j] <- (1 - lambda) stats[j] + lambda [j in truth].
void update_label_stats(Region& region, const LabelSet& truth, double lambda);

class ClasherModel final : public Learner {
 public:
  ClasherModel(std::size_t dim, ClasherOptions options = {});

  LearnerKind kind() const override { return options_.mode2 ? LearnerKind::kMode2 : LearnerKind::kMode1; }
  std::size_t dim() const override { return dim_; }
  const ClasherOptions& options() const { return options_; }
  std::size_t label_count() const { return regions_.size(); }
  const std::vector<Region>& regions() const { return regions_; }
  std::size_t trained_regions() const;

  /// Adds zero-initialised regions (and zero stats columns) up to `labels`.
  void ensure_labels(std::size_t labels);

  /// Index of the best trained region, nullopt when none is trained.
  std::optional<std::size_t> map_region(const HashedVector& v) const;
  LabelSet predict_labels(std::optional<std::size_t> region) const;
  LabelSet predict(const HashedVector& v) const override { return predict_labels(map_region(v)); }

  void learn_mode1(const HashedVector& v, const LabelSet& truth);
  void learn_mode2(const HashedVector& v, const LabelSet& predicted, const LabelSet& truth);
  void learn(const HashedVector& v, const LabelSet& predicted, const LabelSet& truth) override;

  std::size_t memory_bytes() const override;
  std::unique_ptr<Learner> clone() const override { return std::make_unique<ClasherModel>(*this); }

  /// Replaces all regions; used when restoring a snapshot.
  void restore(std::vector<Region> regions);

  friend bool operator==(const ClasherModel& a, const ClasherModel& b);

 private:
  void absorb(std::size_t label, const HashedVector& v, const LabelSet& truth);

  std::size_t dim_;
  ClasherOptions options_;
  std::vector<Region> regions_;
};

}  // namespace clash
