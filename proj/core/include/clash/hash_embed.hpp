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

// Feature hashing of token sequences into a fixed m-dimensional space.
//
// A word w lands in bucket h(w) with sign xi(w); a document's embedding is the
// signed sum of its word counts per bucket. h and xi are the same 64-bit hash
// evaluated under two independent seeds.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clash/text_pipeline.hpp"

namespace clash {

/// Seeded 64-bit MurmurHash64A.
std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed);

/// splitmix64 finalizer; used to derive secondary seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t x);

class HashConfig {
 public:
  /// Throws ContractViolation if m == 0 or the two seeds coincide.
  HashConfig(std::size_t m, std::uint64_t index_seed, std::uint64_t sign_seed);
  /// Sign seed derived from the index seed.
  HashConfig(std::size_t m, std::uint64_t index_seed);

  std::size_t dim() const { return m_; }
  std::uint64_t index_seed() const { return index_seed_; }
  std::uint64_t sign_seed() const { return sign_seed_; }

  friend bool operator==(const HashConfig&, const HashConfig&) = default;

 private:
  std::size_t m_;
  std::uint64_t index_seed_;
  std::uint64_t sign_seed_;
};

std::uint64_t default_sign_seed(std::uint64_t index_seed);

/// Dense m-dimensional embedding of a document.
class HashedVector {
 public:
  HashedVector() = default;
  explicit HashedVector(std::size_t dim) : values_(dim, 0.0) {}
  explicit HashedVector(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t dim() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  HashedVector& operator+=(const HashedVector& other);
  HashedVector& operator*=(double scale);

  double dot(const HashedVector& other) const;
  double squared_norm() const { return dot(*this); }
  double squared_distance(const HashedVector& other) const;

  friend bool operator==(const HashedVector&, const HashedVector&) = default;

 private:
  std::vector<double> values_;
};

/// Non-zero-pattern form of a hashed embedding: (bucket, value) entries sorted
/// by bucket, one per bucket touched by the document. A touched bucket whose
/// signed counts cancelled keeps its entry with value 0.
struct SparseEmbedding {
  std::size_t dim = 0;
  std::vector<std::pair<std::uint32_t, double>> entries;

  double dot(const SparseEmbedding& other) const;
  double dot(const HashedVector& dense) const;
  double squared_norm() const;
  HashedVector to_dense() const;
  static SparseEmbedding from_dense(const HashedVector& v);
};

struct BucketSign {
  std::uint32_t bucket;
  int sign;  // +1 or -1
  friend bool operator==(const BucketSign&, const BucketSign&) = default;
};

BucketSign hash_word(std::string_view word, const HashConfig& config);

enum class Normalization { kNone, kL2, kL1TokenCount };

Normalization parse_normalization(std::string_view name);
std::string to_string(Normalization n);

/// Scales in place. kL1TokenCount divides by `token_count` (the F(d) of raw
/// term frequency); a zero vector or empty document is left unchanged.
void normalize(HashedVector& v, Normalization mode, std::size_t token_count);
void normalize(SparseEmbedding& v, Normalization mode, std::size_t token_count);

SparseEmbedding embed_tf_sparse(const TokenSeq& tokens, const HashConfig& config);
HashedVector embed_tf(const TokenSeq& tokens, const HashConfig& config);

}  // namespace clash
