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

#include "clash/geometry_eval.hpp"

#include <algorithm>
#include <cmath>

#include "clash/errors.hpp"
#include "clash/idf_sketch.hpp"
#include "clash/random.hpp"

namespace clash {

Scheme parse_scheme(std::string_view name) {
  if (name == "tf") return Scheme::kTf;
  if (name == "tfidf") return Scheme::kTfIdf;
  throw ContractViolation("unknown scheme: " + std::string(name));
}

std::string to_string(Scheme s) { return s == Scheme::kTf ? "tf" : "tfidf"; }

HashedSide parse_hashed_side(std::string_view name) {
  if (name == "tf") return HashedSide::kTf;
  if (name == "tfidf") return HashedSide::kTfIdf;
  if (name == "exact") return HashedSide::kExact;
  throw ContractViolation("unknown hashed scheme: " + std::string(name));
}

std::string to_string(HashedSide s) {
  switch (s) {
    case HashedSide::kTf: return "tf";
    case HashedSide::kTfIdf: return "tfidf";
    case HashedSide::kExact: return "exact";
  }
  return "tf";
}

VocabIndex VocabIndex::build(std::span<const TokenSeq> corpus) {
  VocabIndex v;
  for (const auto& doc : corpus) v.add_document(doc);
  return v;
}

void VocabIndex::add_document(const TokenSeq& tokens) {
  std::vector<std::uint32_t> seen;
  seen.reserve(tokens.size());
  for (const auto& w : tokens) {
    auto [it, inserted] = index_.try_emplace(w, static_cast<std::uint32_t>(words_.size()));
    if (inserted) {
      words_.push_back(w);
      df_.push_back(0);
    }
    seen.push_back(it->second);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (auto i : seen) ++df_[i];
  ++documents_;
}

std::optional<std::uint32_t> VocabIndex::find(std::string_view word) const {
  if (auto it = index_.find(std::string(word)); it != index_.end()) return it->second;
  return std::nullopt;
}

double VocabIndex::idf(std::uint32_t index) const {
  return std::log(static_cast<double>(documents_) / static_cast<double>(df_.at(index)));
}

std::uint64_t VocabIndex::total_frequency() const {
  std::uint64_t s = 0;
  for (auto f : df_) s += f;
  return s;
}

double ExactVector::dot(const ExactVector& other) const {
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

double ExactVector::squared_norm() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.second * e.second;
  return s;
}

double ExactVector::at(std::uint32_t index) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const auto& e, std::uint32_t i) { return e.first < i; });
  return (it != entries.end() && it->first == index) ? it->second : 0.0;
}

ExactVector exact_vectorize(const TokenSeq& tokens, const VocabIndex& vocab, Scheme scheme,
                            Normalization norm) {
  std::vector<std::uint32_t> ids;
  ids.reserve(tokens.size());
  for (const auto& w : tokens) {
    auto id = vocab.find(w);
    if (!id) throw UnknownWordError("word not in vocabulary: " + w);
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());

  ExactVector x;
  for (auto id : ids) {
    if (x.entries.empty() || x.entries.back().first != id) x.entries.emplace_back(id, 0.0);
    x.entries.back().second += 1.0;
  }
  if (scheme == Scheme::kTfIdf) {
    for (auto& [i, v] : x.entries) v *= vocab.idf(i);
    std::erase_if(x.entries, [](const auto& e) { return e.second == 0.0; });
  }
  if (norm == Normalization::kL2) {
    const double n2 = x.squared_norm();
    if (n2 > 0.0) {
      const double s = 1.0 / std::sqrt(n2);
      for (auto& e : x.entries) e.second *= s;
    }
  } else if (norm == Normalization::kL1TokenCount && !tokens.empty()) {
    for (auto& e : x.entries) e.second /= static_cast<double>(tokens.size());
  }
  return x;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ContractViolation("pearson samples differ in length");
  if (x.size() < 2) throw DegenerateSampleError("pearson needs at least two samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DegenerateSampleError("zero variance in correlation sample");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationExperiment::CorrelationExperiment(std::vector<TokenSeq> corpus, std::size_t pairs,
                                             std::uint64_t pair_seed, Normalization norm)
    : corpus_(std::move(corpus)), vocab_(VocabIndex::build(corpus_)), norm_(norm) {
  if (corpus_.size() < 2) throw ContractViolation("correlation needs at least two documents");
  if (pairs < 2) throw ContractViolation("correlation needs at least two pairs");
  Rng rng(pair_seed);
  pairs_.reserve(pairs);
  const auto n = corpus_.size();
  while (pairs_.size() < pairs) {
    const auto i = static_cast<std::uint32_t>(uniform_below(rng, n));
    const auto j = static_cast<std::uint32_t>(uniform_below(rng, n));
    if (i != j) pairs_.emplace_back(i, j);
  }
}

std::vector<double> CorrelationExperiment::exact_products(Scheme scheme) {
  const int key = static_cast<int>(scheme);
  if (auto it = exact_cache_.find(key); it != exact_cache_.end()) return it->second;
  std::vector<ExactVector> xs;
  xs.reserve(corpus_.size());
  for (const auto& doc : corpus_) xs.push_back(exact_vectorize(doc, vocab_, scheme, norm_));
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) out.push_back(xs[i].dot(xs[j]));
  exact_cache_.emplace(key, out);
  return out;
}

std::vector<double> CorrelationExperiment::hashed_products(HashedSide side, Scheme exact_scheme,
                                                           std::size_t m,
                                                           std::uint64_t hash_seed) {
  if (side == HashedSide::kExact) return exact_products(exact_scheme);
  const HashConfig config(m, hash_seed);
  std::vector<SparseEmbedding> vs;
  vs.reserve(corpus_.size());
  if (side == HashedSide::kTf) {
    for (const auto& doc : corpus_) {
      vs.push_back(embed_tf_sparse(doc, config));
      normalize(vs.back(), norm_, doc.size());
    }
  } else {
    IdfSketch sketch(config);
    for (const auto& doc : corpus_) {
      vs.push_back(sketch.embed_tfidf_sparse(doc));
      normalize(vs.back(), norm_, doc.size());
    }
  }
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) out.push_back(vs[i].dot(vs[j]));
  return out;
}

double CorrelationExperiment::rho(Scheme exact, HashedSide hashed, std::size_t m,
                                  std::uint64_t hash_seed) {
  const auto x = exact_products(exact);
  const auto y = hashed_products(hashed, exact, m, hash_seed);
  return pearson(x, y);
}

double gram_correlation(std::span<const TokenSeq> corpus, const CorrelationSpec& spec) {
  if (corpus.empty()) throw ContractViolation("correlation needs a non-empty corpus");
  CorrelationExperiment exp(std::vector<TokenSeq>(corpus.begin(), corpus.end()), spec.pairs,
                            spec.pair_seed, spec.norm);
  return exp.rho(spec.exact, spec.hashed, spec.m, spec.hash_seed);
}

}  // namespace clash
