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

#include "clash/clasher.hpp"

#include <limits>

#include "clash/errors.hpp"

namespace clash {

void update_label_stats(Region& region, const LabelSet& truth, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw ContractViolation("lambda must lie in (0, 1]");
  for (std::size_t j = 0; j < region.stats.size(); ++j) {
    double& f = region.stats[j];
    f = (1.0 - lambda) * f + (truth.contains(static_cast<LabelId>(j)) ? lambda : 0.0);
  }
}

ClasherModel::ClasherModel(std::size_t dim, ClasherOptions options)
    : dim_(dim), options_(options) {
  if (dim_ == 0) throw ContractViolation("model dimension must be >= 1");
  if (!(options_.theta >= 0.0 && options_.theta < 1.0)) {
    throw ContractViolation("theta must lie in [0, 1)");
  }
}

std::size_t ClasherModel::trained_regions() const {
  std::size_t n = 0;
  for (const auto& r : regions_) n += r.trained() ? 1 : 0;
  return n;
}

void ClasherModel::ensure_labels(std::size_t labels) {
  if (labels <= regions_.size()) return;
  for (auto& r : regions_) r.stats.resize(labels, 0.0);
  while (regions_.size() < labels) {
    Region r;
    r.prototype = HashedVector(dim_);
    r.stats.assign(labels, 0.0);
    regions_.push_back(std::move(r));
  }
}

std::optional<std::size_t> ClasherModel::map_region(const HashedVector& v) const {
  if (v.dim() != dim_) throw ContractViolation("vector dimension does not match model");
  std::optional<std::size_t> best;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    const Region& r = regions_[i];
    if (!r.trained()) continue;
    // Lower is better for both similarities.
    const double score = options_.similarity == Similarity::kSquaredDistance
                             ? v.squared_distance(r.prototype)
                             : -v.dot(r.prototype);
    if (!best || score < best_score) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

LabelSet ClasherModel::predict_labels(std::optional<std::size_t> region) const {
  LabelSet out;
  if (!region) return out;
  const auto& stats = regions_.at(*region).stats;
  for (std::size_t j = 0; j < stats.size(); ++j) {
    if (stats[j] > options_.theta) out.insert(static_cast<LabelId>(j));
  }
  return out;
}

void ClasherModel::absorb(std::size_t label, const HashedVector& v, const LabelSet& truth) {
  Region& r = regions_[label];
  ++r.count;
  const double lambda = 1.0 / static_cast<double>(r.count);
  auto p = r.prototype.values();
  auto x = v.values();
  for (std::size_t k = 0; k < dim_; ++k) p[k] = (1.0 - lambda) * p[k] + lambda * x[k];
  update_label_stats(r, truth, lambda);
}

void ClasherModel::learn_mode1(const HashedVector& v, const LabelSet& truth) {
  if (v.dim() != dim_) throw ContractViolation("vector dimension does not match model");
  ensure_labels(truth.bound());
  for (LabelId i : truth) absorb(i, v, truth);
}

void ClasherModel::learn_mode2(const HashedVector& v, const LabelSet& predicted,
                               const LabelSet& truth) {
  if (v.dim() != dim_) throw ContractViolation("vector dimension does not match model");
  ensure_labels(truth.bound());
  const LabelSet false_negatives = truth.minus(predicted);
  const LabelSet false_positives = predicted.minus(truth);
  for (LabelId i : false_negatives) absorb(i, v, truth);
  if (false_positives.empty()) return;
  for (LabelId i : truth) {
    if (options_.dedupe && false_negatives.contains(i)) continue;
    absorb(i, v, truth);
  }
}

void ClasherModel::learn(const HashedVector& v, const LabelSet& predicted, const LabelSet& truth) {
  if (options_.mode2) {
    learn_mode2(v, predicted, truth);
  } else {
    learn_mode1(v, truth);
  }
}

std::size_t ClasherModel::memory_bytes() const {
  std::size_t bytes = sizeof(*this);
  for (const auto& r : regions_) {
    bytes += sizeof(Region) + r.prototype.dim() * sizeof(double) + r.stats.size() * sizeof(double);
  }
  return bytes;
}

void ClasherModel::restore(std::vector<Region> regions) {
  for (const auto& r : regions) {
    if (r.prototype.dim() != dim_ || r.stats.size() != regions.size()) {
      throw FormatError("region shape does not match the model");
    }
  }
  regions_ = std::move(regions);
}

bool operator==(const ClasherModel& a, const ClasherModel& b) {
  if (a.dim_ != b.dim_ || a.regions_.size() != b.regions_.size()) return false;
  for (std::size_t i = 0; i < a.regions_.size(); ++i) {
    const auto& x = a.regions_[i];
    const auto& y = b.regions_[i];
    if (x.count != y.count || x.stats != y.stats || !(x.prototype == y.prototype)) return false;
  }
  return true;
}

}  // namespace clash
