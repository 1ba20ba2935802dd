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

// Online document-frequency summary and the IDF-corrected hashed embedding.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "clash/hash_embed.hpp"

namespace clash {

/// L x m array of monotone counters, one seeded hash per row. Point queries
/// return the minimum over rows, which never under-counts.
class CountMinSketch {
 public:
  CountMinSketch(std::size_t width, std::vector<std::uint64_t> row_seeds);
  /// Restores persisted state; counters are row-major, rows * width long.
  CountMinSketch(std::size_t width, std::vector<std::uint64_t> row_seeds,
                 std::vector<std::uint64_t> counters);

  std::size_t rows() const { return row_seeds_.size(); }
  std::size_t width() const { return width_; }
  std::span<const std::uint64_t> row_seeds() const { return row_seeds_; }
  std::span<const std::uint64_t> counters() const { return counters_; }

  std::uint32_t bucket(std::size_t row, std::string_view item) const;
  std::uint64_t counter(std::size_t row, std::size_t bucket) const {
    return counters_[row * width_ + bucket];
  }

  void add(std::string_view item, std::uint64_t count = 1);
  std::uint64_t estimate(std::string_view item) const;

  /// Adds 1 to every counter addressed by at least one of `items`, once per
  /// row regardless of how many items share the counter.
  void add_distinct(std::span<const std::string> items);

  std::size_t memory_bytes() const;

  friend bool operator==(const CountMinSketch&, const CountMinSketch&) = default;

 private:
  void bump(std::size_t row, std::size_t bucket, std::uint64_t count);

  std::size_t width_;
  std::vector<std::uint64_t> row_seeds_;
  std::vector<std::uint64_t> counters_;
};

/// Row seeds for an L-row sketch whose row 0 shares `config`'s bucket hash.
std::vector<std::uint64_t> sketch_row_seeds(const HashConfig& config, std::size_t rows);

class IdfSketch {
 public:
  explicit IdfSketch(const HashConfig& config, std::size_t rows = 1);
  IdfSketch(const HashConfig& config, CountMinSketch sketch, std::uint64_t documents);

  const CountMinSketch& sketch() const { return sketch_; }
  std::uint64_t documents() const { return documents_; }
  std::size_t rows() const { return sketch_.rows(); }

  /// Counts the document once (n += 1) and each distinct addressed counter
  /// once. Returns the sorted distinct row-0 buckets touched.
  std::vector<std::uint32_t> absorb_document(const TokenSeq& tokens);

  /// ln(n / C_k) from the row-0 counter. Throws UntouchedBucketError when
  /// n == 0 or C_k == 0.
  double idf_of_bucket(std::size_t k) const;

  /// ln(n / f^(w)) with f^(w) the min-over-rows estimate.
  double idf_of_word(std::string_view word) const;

  /// Signed TF embedding scaled per touched bucket by the IDF computed after
  /// this document has been absorbed. Mutates the sketch.
  SparseEmbedding embed_tfidf_sparse(const TokenSeq& tokens);
  HashedVector embed_tfidf(const TokenSeq& tokens);

  std::size_t memory_bytes() const { return sketch_.memory_bytes() + sizeof(documents_); }

  friend bool operator==(const IdfSketch&, const IdfSketch&) = default;

 private:
  HashConfig config_;
  CountMinSketch sketch_;
  std::uint64_t documents_ = 0;
};

}  // namespace clash
