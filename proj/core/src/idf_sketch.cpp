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

#include "clash/idf_sketch.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "clash/errors.hpp"

namespace clash {

CountMinSketch::CountMinSketch(std::size_t width, std::vector<std::uint64_t> row_seeds)
    : width_(width), row_seeds_(std::move(row_seeds)), counters_(width_ * row_seeds_.size(), 0) {
  if (width_ == 0) throw ContractViolation("sketch width must be >= 1");
  if (row_seeds_.empty()) throw ContractViolation("sketch needs at least one row");
}

CountMinSketch::CountMinSketch(std::size_t width, std::vector<std::uint64_t> row_seeds,
                               std::vector<std::uint64_t> counters)
    : CountMinSketch(width, std::move(row_seeds)) {
  if (counters.size() != counters_.size()) {
    throw FormatError("sketch counter array has wrong length");
  }
  counters_ = std::move(counters);
}

std::uint32_t CountMinSketch::bucket(std::size_t row, std::string_view item) const {
  return static_cast<std::uint32_t>(hash_bytes(item, row_seeds_[row]) % width_);
}

void CountMinSketch::bump(std::size_t row, std::size_t bucket, std::uint64_t count) {
  auto& c = counters_[row * width_ + bucket];
  assert(c <= std::numeric_limits<std::uint64_t>::max() - count);
  c += count;
}

void CountMinSketch::add(std::string_view item, std::uint64_t count) {
  for (std::size_t r = 0; r < rows(); ++r) bump(r, bucket(r, item), count);
}

std::uint64_t CountMinSketch::estimate(std::string_view item) const {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t r = 0; r < rows(); ++r) best = std::min(best, counter(r, bucket(r, item)));
  return best;
}

void CountMinSketch::add_distinct(std::span<const std::string> items) {
  std::vector<std::uint32_t> buckets;
  buckets.reserve(items.size());
  for (std::size_t r = 0; r < rows(); ++r) {
    buckets.clear();
    for (const auto& w : items) buckets.push_back(bucket(r, w));
    std::sort(buckets.begin(), buckets.end());
    buckets.erase(std::unique(buckets.begin(), buckets.end()), buckets.end());
    for (auto k : buckets) bump(r, k, 1);
  }
}

std::size_t CountMinSketch::memory_bytes() const {
  return counters_.size() * sizeof(std::uint64_t) + row_seeds_.size() * sizeof(std::uint64_t);
}

std::vector<std::uint64_t> sketch_row_seeds(const HashConfig& config, std::size_t rows) {
  std::vector<std::uint64_t> seeds;
  seeds.reserve(rows);
  seeds.push_back(config.index_seed());
  for (std::size_t r = 1; r < rows; ++r) {
    std::uint64_t s = mix_seed(config.index_seed() + 0x632be59bd9b4e019ULL * r);
    while (std::find(seeds.begin(), seeds.end(), s) != seeds.end() || s == config.sign_seed()) ++s;
    seeds.push_back(s);
  }
  return seeds;
}

IdfSketch::IdfSketch(const HashConfig& config, std::size_t rows)
    : config_(config), sketch_(config.dim(), sketch_row_seeds(config, rows)) {}

IdfSketch::IdfSketch(const HashConfig& config, CountMinSketch sketch, std::uint64_t documents)
    : config_(config), sketch_(std::move(sketch)), documents_(documents) {
  if (sketch_.width() != config_.dim() || sketch_.row_seeds()[0] != config_.index_seed()) {
    throw FormatError("sketch row 0 does not match the hash configuration");
  }
}

std::vector<std::uint32_t> IdfSketch::absorb_document(const TokenSeq& tokens) {
  sketch_.add_distinct(tokens);
  ++documents_;
  std::vector<std::uint32_t> touched;
  touched.reserve(tokens.size());
  for (const auto& w : tokens) touched.push_back(sketch_.bucket(0, w));
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  return touched;
}

double IdfSketch::idf_of_bucket(std::size_t k) const {
  if (documents_ == 0) throw UntouchedBucketError("IDF requested from an empty sketch");
  if (k >= sketch_.width()) throw ContractViolation("bucket index out of range");
  const std::uint64_t c = sketch_.counter(0, k);
  if (c == 0) throw UntouchedBucketError("IDF requested for untouched bucket " + std::to_string(k));
  return std::log(static_cast<double>(documents_) / static_cast<double>(c));
}

double IdfSketch::idf_of_word(std::string_view word) const {
  if (documents_ == 0) throw UntouchedBucketError("IDF requested from an empty sketch");
  const std::uint64_t c = sketch_.estimate(word);
  if (c == 0) throw UntouchedBucketError("IDF requested for an unseen word");
  return std::log(static_cast<double>(documents_) / static_cast<double>(c));
}

SparseEmbedding IdfSketch::embed_tfidf_sparse(const TokenSeq& tokens) {
  SparseEmbedding v = embed_tf_sparse(tokens, config_);
  absorb_document(tokens);
  const double n = static_cast<double>(documents_);

  if (sketch_.rows() == 1) {
    for (auto& [k, x] : v.entries) x *= std::log(n / static_cast<double>(sketch_.counter(0, k)));
    return v;
  }

  // Several words of this document may share a row-0 bucket; take the largest
  // of their min-over-rows estimates so no colliding word is under-counted.
  std::unordered_map<std::uint32_t, std::uint64_t> estimate;
  for (const auto& w : tokens) {
    auto& e = estimate[sketch_.bucket(0, w)];
    e = std::max(e, sketch_.estimate(w));
  }
  for (auto& [k, x] : v.entries) x *= std::log(n / static_cast<double>(estimate.at(k)));
  return v;
}

HashedVector IdfSketch::embed_tfidf(const TokenSeq& tokens) {
  return embed_tfidf_sparse(tokens).to_dense();
}

}  // namespace clash
