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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "clash/errors.hpp"
#include "clash/geometry_eval.hpp"
#include "clash/synthetic_corpus.hpp"

namespace clash {
namespace {

std::vector<TokenSeq> small_corpus(std::size_t n, std::uint64_t seed = 3) {
  SyntheticCorpusConfig config;
  config.seed = seed;
  SyntheticCorpus gen(config);
  std::vector<TokenSeq> docs;
  for (std::size_t i = 0; i < n; ++i) docs.push_back(tokenize(gen.next().text, {}));
  return docs;
}

TEST(Vocab, DocumentFrequency) {
  const std::vector<TokenSeq> corpus = {{"a", "a", "b"}, {"b"}, {"c", "b"}};
  const auto v = VocabIndex::build(corpus);
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(v.documents(), 3u);
  EXPECT_EQ(v.document_frequency(*v.find("a")), 1u);
  EXPECT_EQ(v.document_frequency(*v.find("b")), 3u);
  EXPECT_EQ(v.total_frequency(), 5u);
  EXPECT_FALSE(v.find("zzz").has_value());
  EXPECT_EQ(v.word(*v.find("c")), "c");
}

TEST(ExactVectorize, RawCounts) {
  const std::vector<TokenSeq> corpus = {{"a", "a", "b"}};
  const auto v = VocabIndex::build(corpus);
  const auto x = exact_vectorize({"a", "a", "b"}, v, Scheme::kTf);
  EXPECT_EQ(x.at(*v.find("a")), 2.0);
  EXPECT_EQ(x.at(*v.find("b")), 1.0);
  EXPECT_EQ(x.entries.size(), 2u);
}

TEST(ExactVectorize, TfIdfWeight) {
  std::vector<TokenSeq> corpus(10, TokenSeq{"filler"});
  corpus[0].push_back("rare");
  corpus[1].push_back("rare");
  const auto v = VocabIndex::build(corpus);
  const auto id = *v.find("rare");
  EXPECT_NEAR(v.idf(id), std::log(5.0), 1e-15);
  const auto x = exact_vectorize({"rare", "rare", "filler"}, v, Scheme::kTfIdf);
  EXPECT_NEAR(x.at(id), 2.0 * std::log(5.0), 1e-15);
  EXPECT_NEAR(x.at(id), 3.2189, 1e-4);
  EXPECT_EQ(x.at(*v.find("filler")), 0.0);
}

TEST(ExactVectorize, UnknownWordThrows) {
  const std::vector<TokenSeq> corpus = {{"a"}};
  const auto v = VocabIndex::build(corpus);
  EXPECT_THROW(exact_vectorize({"b"}, v, Scheme::kTf), UnknownWordError);
}

TEST(ExactVectorize, Normalized) {
  const std::vector<TokenSeq> corpus = {{"a", "b"}};
  const auto v = VocabIndex::build(corpus);
  const auto x = exact_vectorize({"a", "a", "a", "b", "b", "b", "b"}, v, Scheme::kTf, Normalization::kL2);
  EXPECT_NEAR(x.squared_norm(), 1.0, 1e-15);
}

TEST(Pearson, Basics) {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {2, 4, 6, 8};
  const std::vector<double> z = {4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(pearson(x, y), 1.0);
  EXPECT_DOUBLE_EQ(pearson(x, z), -1.0);
  const std::vector<double> c = {1, 1, 1, 1};
  EXPECT_THROW(pearson(x, c), DegenerateSampleError);
  EXPECT_THROW(pearson(std::vector<double>{1}, std::vector<double>{1}), DegenerateSampleError);
}

TEST(Correlation, ExactVersusExactIsOne) {
  const auto corpus = small_corpus(40);
  for (auto scheme : {Scheme::kTf, Scheme::kTfIdf}) {
    CorrelationSpec spec;
    spec.exact = scheme;
    spec.hashed = HashedSide::kExact;
    spec.pairs = 500;
    EXPECT_EQ(gram_correlation(corpus, spec), 1.0);
  }
}

TEST(Correlation, CollisionFreeHashingIsIsometric) {
  const std::vector<TokenSeq> corpus = {{"red", "green", "red"}, {"blue", "green"}, {"red", "blue", "blue"},
                                        {"green"}, {"teal", "red", "teal", "blue"}};
  const std::size_t m = 1 << 16;
  std::uint64_t seed = 1;
  for (;; ++seed) {
    const HashConfig config(m, seed);
    std::set<std::uint32_t> buckets;
    for (const auto* w : {"red", "green", "blue", "teal"}) buckets.insert(hash_word(w, config).bucket);
    if (buckets.size() == 4) break;
  }
  CorrelationSpec spec;
  spec.m = m;
  spec.hash_seed = seed;
  spec.pairs = 200;
  EXPECT_NEAR(gram_correlation(corpus, spec), 1.0, 1e-9);
}

TEST(Correlation, ImprovesWithDimension) {
  const auto corpus = small_corpus(300);
  CorrelationExperiment exp(corpus, 5000, 7);
  const double lo = exp.rho(Scheme::kTf, HashedSide::kTf, 1 << 6, 1);
  const double hi = exp.rho(Scheme::kTf, HashedSide::kTf, 1 << 14, 1);
  EXPECT_LT(lo, hi);
  EXPECT_GT(hi, 0.98);
}

TEST(Correlation, PairsAreDistinctAndReproducible) {
  const auto corpus = small_corpus(20);
  CorrelationExperiment a(corpus, 300, 11);
  CorrelationExperiment b(corpus, 300, 11);
  EXPECT_EQ(a.pairs(), b.pairs());
  for (const auto& [i, j] : a.pairs()) EXPECT_NE(i, j);
  EXPECT_THROW(CorrelationExperiment({{"a"}}, 10, 1), ContractViolation);
}

TEST(Schemes, Parse) {
  EXPECT_EQ(parse_scheme("tfidf"), Scheme::kTfIdf);
  EXPECT_EQ(to_string(Scheme::kTf), "tf");
  EXPECT_EQ(parse_hashed_side("exact"), HashedSide::kExact);
  EXPECT_THROW(parse_scheme("bm25"), ContractViolation);
}

}  // namespace
}  // namespace clash
