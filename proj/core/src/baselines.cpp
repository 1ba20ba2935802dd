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

#include "clash/baselines.hpp"

#include <algorithm>
#include <limits>

#include "clash/errors.hpp"

namespace clash {

PerceptronBR::PerceptronBR(std::size_t dim, double learning_rate)
    : dim_(dim), learning_rate_(learning_rate) {
  if (dim_ == 0) throw ContractViolation("model dimension must be >= 1");
  if (!(learning_rate_ > 0.0)) throw ContractViolation("learning rate must be positive");
}

void PerceptronBR::ensure_labels(std::size_t labels) {
  while (weights_.size() < labels) weights_.emplace_back(dim_);
}

LabelSet PerceptronBR::predict(const HashedVector& v) const {
  if (v.dim() != dim_) throw ContractViolation("vector dimension does not match model");
  LabelSet out;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j].dot(v) > 0.0) out.insert(static_cast<LabelId>(j));
  }
  return out;
}

void PerceptronBR::learn(const HashedVector& v, const LabelSet& predicted, const LabelSet& truth) {
  if (v.dim() != dim_) throw ContractViolation("vector dimension does not match model");
  ensure_labels(std::max(truth.bound(), predicted.bound()));
  const auto step = [&](LabelId j, double y) {
    auto w = weights_[j].values();
    auto x = v.values();
    for (std::size_t k = 0; k < dim_; ++k) w[k] += learning_rate_ * y * x[k];
  };
  for (LabelId j : truth.minus(predicted)) step(j, +1.0);
  for (LabelId j : predicted.minus(truth)) step(j, -1.0);
}

std::size_t PerceptronBR::memory_bytes() const {
  return sizeof(*this) + weights_.size() * (sizeof(HashedVector) + dim_ * sizeof(double));
}

void PerceptronBR::restore(std::vector<HashedVector> weights) {
  for (const auto& w : weights) {
    if (w.dim() != dim_) throw FormatError("weight vector dimension does not match the model");
  }
  weights_ = std::move(weights);
}

Knn1Store::Knn1Store(std::size_t dim) : dim_(dim) {
  if (dim_ == 0) throw ContractViolation("model dimension must be >= 1");
}

void Knn1Store::insert(const HashedVector& v, const LabelSet& labels) {
  if (v.dim() != dim_) throw ContractViolation("vector dimension does not match model");
  if (labels.empty()) throw ContractViolation("knn1 entries need at least one label");
  auto sparse = SparseEmbedding::from_dense(v);
  const double norm = sparse.squared_norm();
  entries_.push_back({std::move(sparse), norm, labels});
}

LabelSet Knn1Store::predict(const HashedVector& v) const {
  if (v.dim() != dim_) throw ContractViolation("vector dimension does not match model");
  if (entries_.empty()) return {};
  const double vv = v.squared_norm();
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const double d = vv + e.squared_norm - 2.0 * e.vector.dot(v);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return entries_[best].labels;
}

void Knn1Store::learn(const HashedVector& v, const LabelSet&, const LabelSet& truth) {
  if (!truth.empty()) insert(v, truth);
}

void Knn1Store::restore(std::vector<Entry> entries) {
  for (auto& e : entries) {
    if (e.vector.dim != dim_) throw FormatError("stored vector dimension does not match the model");
    e.squared_norm = e.vector.squared_norm();
  }
  entries_ = std::move(entries);
}

std::size_t Knn1Store::memory_bytes() const {
  std::size_t bytes = sizeof(*this);
  for (const auto& e : entries_) {
    bytes += sizeof(Entry) + e.vector.entries.size() * sizeof(e.vector.entries[0]) +
             e.labels.size() * sizeof(LabelId);
  }
  return bytes;
}

}  // namespace clash
