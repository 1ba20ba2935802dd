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

// Reproducible multi-label text corpus.
//
// Words come from a Zipf-distributed background vocabulary mixed with
// topic-specific word lists. Labels form a two-level hierarchy: a document is
// drawn either for a parent topic alone or for a child topic, in which case it
// carries both the child and its parent label and mixes both word lists.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clash/random.hpp"

namespace clash {

struct Document {
  std::string id;
  std::string text;
  std::vector<std::string> labels;
};

struct SyntheticCorpusConfig {
  std::size_t vocab_size = 20000;
  double zipf_exponent = 1.1;
  /// Children per parent; the label count is parents + children.
  std::vector<std::size_t> children_per_parent = {3, 2, 2};
  /// Fraction of documents drawn for a child topic (each carries 2 labels).
  double child_fraction = 0.6;
  /// Zipf exponent over topic prevalence; 0 draws topics uniformly.
  double topic_skew = 0.0;
  /// Words owned by each topic, taken from disjoint mid-frequency ranks.
  std::size_t topic_words = 300;
  std::size_t topic_rank_offset = 2000;
  /// Probability that a token is drawn from the document's topics.
  double topical_fraction = 0.4;
  std::size_t min_length = 60;
  std::size_t max_length = 140;
  /// Fraction of documents emitted without labels.
  double unlabelled_fraction = 0.0;
  std::uint64_t seed = 20260101;
};

class SyntheticCorpus {
 public:
  explicit SyntheticCorpus(SyntheticCorpusConfig config);

  const SyntheticCorpusConfig& config() const { return config_; }
  std::size_t label_count() const { return label_names_.size(); }
  const std::vector<std::string>& label_names() const { return label_names_; }
  /// Pseudo-word for a vocabulary rank; distinct ranks give distinct words.
  static std::string word(std::size_t rank);

  /// Draws the next document. The sequence depends only on the config.
  Document next();
  std::vector<Document> generate(std::size_t count);

 private:
  std::size_t sample_zipf(const std::vector<double>& cdf);

  SyntheticCorpusConfig config_;
  Rng rng_;
  std::uint64_t produced_ = 0;
  std::vector<std::string> label_names_;
  std::vector<std::size_t> parent_of_;  // label -> parent label, or itself for parents
  std::size_t parents_ = 0;
  std::vector<double> background_cdf_;
  std::vector<double> topic_cdf_;
  std::vector<double> parent_cdf_;
  std::vector<double> child_cdf_;
};

}  // namespace clash
