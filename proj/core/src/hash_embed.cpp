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

#include "clash/hash_embed.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>

#include "clash/errors.hpp"

namespace clash {

std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed) {
  constexpr std::uint64_t m = 0xc6a4a7935bd1e995ULL;
  constexpr int r = 47;
  const std::size_t len = bytes.size();
  std::uint64_t h = seed ^ (len * m);

  const char* data = bytes.data();
  const char* end = data + (len / 8) * 8;
  for (; data != end; data += 8) {
    std::uint64_t k;
    std::memcpy(&k, data, 8);
    k *= m;
    k ^= k >> r;
    k *= m;
    h ^= k;
    h *= m;
  }

  const auto* tail = reinterpret_cast<const unsigned char*>(data);
  switch (len & 7) {
    case 7: h ^= std::uint64_t(tail[6]) << 48; [[fallthrough]];
    case 6: h ^= std::uint64_t(tail[5]) << 40; [[fallthrough]];
    case 5: h ^= std::uint64_t(tail[4]) << 32; [[fallthrough]];
    case 4: h ^= std::uint64_t(tail[3]) << 24; [[fallthrough]];
    case 3: h ^= std::uint64_t(tail[2]) << 16; [[fallthrough]];
    case 2: h ^= std::uint64_t(tail[1]) << 8; [[fallthrough]];
    case 1:
      h ^= std::uint64_t(tail[0]);
      h *= m;
  }

  h ^= h >> r;
  h *= m;
  h ^= h >> r;
  return h;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t default_sign_seed(std::uint64_t index_seed) {
  std::uint64_t s = mix_seed(index_seed ^ 0x5349474e5345454dULL);
  return s == index_seed ? s + 1 : s;
}

HashConfig::HashConfig(std::size_t m, std::uint64_t index_seed, std::uint64_t sign_seed)
    : m_(m), index_seed_(index_seed), sign_seed_(sign_seed) {
  if (m_ == 0) throw ContractViolation("hash dimension m must be >= 1");
  if (m_ > (std::size_t{1} << 32)) throw ContractViolation("hash dimension m must fit in 32 bits");
  if (index_seed_ == sign_seed_) throw ContractViolation("index_seed and sign_seed must differ");
}

HashConfig::HashConfig(std::size_t m, std::uint64_t index_seed)
    : HashConfig(m, index_seed, default_sign_seed(index_seed)) {}

HashedVector& HashedVector::operator+=(const HashedVector& other) {
  if (other.dim() != dim()) throw ContractViolation("dimension mismatch in +=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

HashedVector& HashedVector::operator*=(double scale) {
  for (double& x : values_) x *= scale;
  return *this;
}

double HashedVector::dot(const HashedVector& other) const {
  if (other.dim() != dim()) throw ContractViolation("dimension mismatch in dot");
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * other.values_[i];
  return s;
}

double HashedVector::squared_distance(const HashedVector& other) const {
  if (other.dim() != dim()) throw ContractViolation("dimension mismatch in distance");
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double d = values_[i] - other.values_[i];
    s += d * d;
  }
  return s;
}

double SparseEmbedding::dot(const SparseEmbedding& other) const {
  double s = 0.0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() && b != other.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

double SparseEmbedding::dot(const HashedVector& dense) const {
  double s = 0.0;
  for (const auto& [k, v] : entries) s += v * dense[k];
  return s;
}

double SparseEmbedding::squared_norm() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.second * e.second;
  return s;
}

HashedVector SparseEmbedding::to_dense() const {
  HashedVector v(dim);
  for (const auto& [k, x] : entries) v[k] = x;
  return v;
}

SparseEmbedding SparseEmbedding::from_dense(const HashedVector& v) {
  SparseEmbedding s;
  s.dim = v.dim();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] != 0.0) s.entries.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return s;
}

BucketSign hash_word(std::string_view word, const HashConfig& config) {
  const std::uint64_t hk = hash_bytes(word, config.index_seed());
  const std::uint64_t hs = hash_bytes(word, config.sign_seed());
  return {static_cast<std::uint32_t>(hk % config.dim()), (hs >> 63) ? -1 : 1};
}

Normalization parse_normalization(std::string_view name) {
  if (name == "none") return Normalization::kNone;
  if (name == "l2") return Normalization::kL2;
  if (name == "l1" || name == "l1-by-token-count") return Normalization::kL1TokenCount;
  throw ContractViolation("unknown normalization: " + std::string(name));
}

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::kNone: return "none";
    case Normalization::kL2: return "l2";
    case Normalization::kL1TokenCount: return "l1";
  }
  return "none";
}

namespace {

double scale_for(Normalization mode, double squared_norm, std::size_t token_count) {
  switch (mode) {
    case Normalization::kNone:
      return 1.0;
    case Normalization::kL2:
      return squared_norm > 0.0 ? 1.0 / std::sqrt(squared_norm) : 1.0;
    case Normalization::kL1TokenCount:
      return token_count > 0 ? 1.0 / static_cast<double>(token_count) : 1.0;
  }
  return 1.0;
}

}  // namespace

void normalize(HashedVector& v, Normalization mode, std::size_t token_count) {
  if (mode == Normalization::kNone) return;
  const double s = scale_for(mode, mode == Normalization::kL2 ? v.squared_norm() : 0.0, token_count);
  if (s != 1.0) v *= s;
}

void normalize(SparseEmbedding& v, Normalization mode, std::size_t token_count) {
  if (mode == Normalization::kNone) return;
  const double s = scale_for(mode, mode == Normalization::kL2 ? v.squared_norm() : 0.0, token_count);
  if (s == 1.0) return;
  for (auto& e : v.entries) e.second *= s;
}

SparseEmbedding embed_tf_sparse(const TokenSeq& tokens, const HashConfig& config) {
  std::vector<BucketSign> hits;
  hits.reserve(tokens.size());
  for (const auto& w : tokens) hits.push_back(hash_word(w, config));
  std::sort(hits.begin(), hits.end(),
            [](const BucketSign& a, const BucketSign& b) { return a.bucket < b.bucket; });

  SparseEmbedding out;
  out.dim = config.dim();
  for (const auto& h : hits) {
    if (out.entries.empty() || out.entries.back().first != h.bucket) {
      out.entries.emplace_back(h.bucket, 0.0);
    }
    out.entries.back().second += h.sign;
  }
  return out;
}

HashedVector embed_tf(const TokenSeq& tokens, const HashConfig& config) {
  HashedVector v(config.dim());
  for (const auto& w : tokens) {
    const auto [k, s] = hash_word(w, config);
    v[k] += s;
  }
  return v;
}

}  // namespace clash
