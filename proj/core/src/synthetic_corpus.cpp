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

#include "clash/synthetic_corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "clash/errors.hpp"

namespace clash {

namespace {

constexpr const char* kSyllables[] = {"ka", "lo", "mi", "ne", "ru", "ta", "vo", "zi", "pe", "su",
                                      "da", "fo", "gi", "he", "ju", "ba", "co", "wi", "xe", "yu"};
constexpr std::size_t kSyllableCount = std::size(kSyllables);

std::vector<double> zipf_cdf(std::size_t n, double exponent) {
  std::vector<double> cdf(n);
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    total += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
    cdf[r] = total;
  }
  for (double& c : cdf) c /= total;
  cdf.back() = 1.0;
  return cdf;
}

}  // namespace

SyntheticCorpus::SyntheticCorpus(SyntheticCorpusConfig config)
    : config_(std::move(config)), rng_(config_.seed) {
  if (config_.children_per_parent.empty()) throw ContractViolation("need at least one parent topic");
  parents_ = config_.children_per_parent.size();
  for (std::size_t p = 0; p < parents_; ++p) {
    label_names_.push_back("topic" + std::to_string(p));
    parent_of_.push_back(p);
  }
  for (std::size_t p = 0; p < parents_; ++p) {
    for (std::size_t c = 0; c < config_.children_per_parent[p]; ++c) {
      label_names_.push_back("topic" + std::to_string(p) + "." + std::to_string(c));
      parent_of_.push_back(p);
    }
  }
  if (config_.topic_rank_offset + label_names_.size() * config_.topic_words > config_.vocab_size) {
    throw ContractViolation("topic word ranges exceed the vocabulary");
  }
  if (config_.min_length == 0 || config_.max_length < config_.min_length) {
    throw ContractViolation("invalid document length range");
  }
  background_cdf_ = zipf_cdf(config_.vocab_size, config_.zipf_exponent);
  topic_cdf_ = zipf_cdf(config_.topic_words, config_.zipf_exponent);
  if (config_.topic_skew < 0.0) throw ContractViolation("topic_skew must be >= 0");
  if (config_.topic_skew > 0.0) {
    parent_cdf_ = zipf_cdf(parents_, config_.topic_skew);
    if (label_names_.size() > parents_) child_cdf_ = zipf_cdf(label_names_.size() - parents_, config_.topic_skew);
  }
}

std::string SyntheticCorpus::word(std::size_t rank) {
  // Base-20 digits of the rank spelled as two-letter syllables, padded to two
  // syllables. Only padded (single-digit) ranks start with the zero syllable.
  std::string w;
  std::size_t x = rank;
  std::size_t digits = 0;
  do {
    w.insert(0, kSyllables[x % kSyllableCount]);
    x /= kSyllableCount;
    ++digits;
  } while (x > 0);
  while (digits < 2) {
    w.insert(0, kSyllables[0]);
    ++digits;
  }
  return w;
}

std::size_t SyntheticCorpus::sample_zipf(const std::vector<double>& cdf) {
  const double u = uniform01(rng_);
  return static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
}

Document SyntheticCorpus::next() {
  Document doc;
  char id[32];
  std::snprintf(id, sizeof(id), "doc-%07llu", static_cast<unsigned long long>(++produced_));
  doc.id = id;

  std::vector<std::size_t> topics;
  const std::size_t children = label_names_.size() - parents_;
  if (children > 0 && uniform01(rng_) < config_.child_fraction) {
    const std::size_t child =
        parents_ + (child_cdf_.empty() ? uniform_below(rng_, children) : sample_zipf(child_cdf_));
    topics = {parent_of_[child], child};
  } else {
    topics = {parent_cdf_.empty() ? uniform_below(rng_, parents_) : sample_zipf(parent_cdf_)};
  }
  const bool labelled = !(uniform01(rng_) < config_.unlabelled_fraction);
  if (labelled) {
    for (auto t : topics) doc.labels.push_back(label_names_[t]);
  }

  const std::size_t length =
      config_.min_length + uniform_below(rng_, config_.max_length - config_.min_length + 1);
  bool capitalize = true;
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t rank;
    if (uniform01(rng_) < config_.topical_fraction) {
      const std::size_t t = topics[uniform_below(rng_, topics.size())];
      rank = config_.topic_rank_offset + t * config_.topic_words + sample_zipf(topic_cdf_);
    } else {
      rank = sample_zipf(background_cdf_);
    }
    std::string w = word(rank);
    if (capitalize) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    if (!doc.text.empty()) doc.text.push_back(' ');
    doc.text += w;
    capitalize = uniform_below(rng_, 12) == 0;
    if (capitalize) doc.text.push_back(uniform_below(rng_, 4) == 0 ? ',' : '.');
  }
  return doc;
}

std::vector<Document> SyntheticCorpus::generate(std::size_t count) {
  std::vector<Document> docs;
  docs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) docs.push_back(next());
  return docs;
}

}  // namespace clash
