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

// Exact full-vocabulary vectorizer and the Gram-matrix correlation between the
// exact space and the hashed space. This is a batch oracle: the whole corpus
// is held in memory.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clash/hash_embed.hpp"
#include "clash/text_pipeline.hpp"

namespace clash {

enum class Scheme { kTf, kTfIdf };

Scheme parse_scheme(std::string_view name);
std::string to_string(Scheme s);

/// Word -> dense index with per-word document frequency over the documents
/// added so far.
class VocabIndex {
 public:
  static VocabIndex build(std::span<const TokenSeq> corpus);

  void add_document(const TokenSeq& tokens);

  std::optional<std::uint32_t> find(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  std::uint64_t documents() const { return documents_; }
  std::uint64_t document_frequency(std::uint32_t index) const { return df_.at(index); }
  const std::string& word(std::uint32_t index) const { return words_.at(index); }
  /// ln(n / f(i)).
  double idf(std::uint32_t index) const;
  /// Sum of all document frequencies.
  std::uint64_t total_frequency() const;

 private:
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::string> words_;
  std::vector<std::uint64_t> df_;
  std::uint64_t documents_ = 0;
};

/// Sparse exact vector, entries sorted by index, no explicit zeros.
struct ExactVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  double dot(const ExactVector& other) const;
  double squared_norm() const;
  double at(std::uint32_t index) const;
};

/// TF is raw counts unless `norm` says otherwise; TFIDF multiplies each count
/// by ln(n / f). Throws UnknownWordError for words outside `vocab`.
ExactVector exact_vectorize(const TokenSeq& tokens, const VocabIndex& vocab, Scheme scheme,
                            Normalization norm = Normalization::kNone);

/// Pearson correlation; throws DegenerateSampleError on zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

enum class HashedSide {
  kTf,     // hashed raw counts
  kTfIdf,  // hashed counts with online sketch IDF, corpus replayed in order
  kExact,  // no hashing: the exact space of the same scheme
};

HashedSide parse_hashed_side(std::string_view name);
std::string to_string(HashedSide s);

struct CorrelationSpec {
  std::size_t m = 1 << 12;
  Scheme exact = Scheme::kTf;
  HashedSide hashed = HashedSide::kTf;
  std::size_t pairs = 200000;
  std::uint64_t pair_seed = 1;
  std::uint64_t hash_seed = 1;
  Normalization norm = Normalization::kNone;
};

/// Holds a tokenized corpus plus a fixed sample of document pairs, and
/// caches exact inner products so several (m, seed, scheme) points can be
/// evaluated against one sample.
class CorrelationExperiment {
 public:
  CorrelationExperiment(std::vector<TokenSeq> corpus, std::size_t pairs, std::uint64_t pair_seed,
                        Normalization norm = Normalization::kNone);

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs() const { return pairs_; }
  const VocabIndex& vocab() const { return vocab_; }

  double rho(Scheme exact, HashedSide hashed, std::size_t m, std::uint64_t hash_seed);

  std::vector<double> exact_products(Scheme scheme);
  std::vector<double> hashed_products(HashedSide side, Scheme exact_scheme, std::size_t m,
                                      std::uint64_t hash_seed);

 private:
  std::vector<TokenSeq> corpus_;
  VocabIndex vocab_;
  Normalization norm_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::unordered_map<int, std::vector<double>> exact_cache_;
};

double gram_correlation(std::span<const TokenSeq> corpus, const CorrelationSpec& spec);

}  // namespace clash
