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

// Reference online learners over the same hashed vectors as the clasher.

#pragma once

#include <cstddef>
#include <vector>

#include "clash/hash_embed.hpp"
#include "clash/labels.hpp"
#include "clash/learner.hpp"

namespace clash {

/// Binary relevance: one perceptron per label, no bias, decision w . v > 0.
class PerceptronBR final : public Learner {
 public:
  explicit PerceptronBR(std::size_t dim, double learning_rate = 0.1);

  LearnerKind kind() const override { return LearnerKind::kPerceptron; }
  std::size_t dim() const override { return dim_; }
  double learning_rate() const { return learning_rate_; }
  const std::vector<HashedVector>& weights() const { return weights_; }

  void ensure_labels(std::size_t labels);
  LabelSet predict(const HashedVector& v) const override;
  /// w_j += rate * v on false negatives, w_j -= rate * v on false positives.
  void learn(const HashedVector& v, const LabelSet& predicted, const LabelSet& truth) override;

  std::size_t memory_bytes() const override;
  std::unique_ptr<Learner> clone() const override { return std::make_unique<PerceptronBR>(*this); }

  void restore(std::vector<HashedVector> weights);

  friend bool operator==(const PerceptronBR& a, const PerceptronBR& b) {
    return a.dim_ == b.dim_ && a.learning_rate_ == b.learning_rate_ && a.weights_ == b.weights_;
  }

 private:
  std::size_t dim_;
  double learning_rate_;
  std::vector<HashedVector> weights_;
};

/// Stores every labelled document and predicts the labels of the nearest one
/// (squared Euclidean, earliest entry wins ties). Entries are kept in sparse
/// form; the store grows linearly with the stream.
class Knn1Store final : public Learner {
 public:
  struct Entry {
    SparseEmbedding vector;
    double squared_norm = 0.0;
    LabelSet labels;
  };

  explicit Knn1Store(std::size_t dim);

  LearnerKind kind() const override { return LearnerKind::kKnn1; }
  std::size_t dim() const override { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  void insert(const HashedVector& v, const LabelSet& labels);
  LabelSet predict(const HashedVector& v) const override;
  /// Inserts (v, truth) whenever truth is non-empty.
  void learn(const HashedVector& v, const LabelSet& predicted, const LabelSet& truth) override;

  std::size_t memory_bytes() const override;
  std::unique_ptr<Learner> clone() const override { return std::make_unique<Knn1Store>(*this); }

  void restore(std::vector<Entry> entries);

 private:
  std::size_t dim_;
  std::vector<Entry> entries_;
};

}  // namespace clash
