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

// Per-document cost of the pipeline stages.

#include <benchmark/benchmark.h>

#include "clash/baselines.hpp"
#include "clash/stream_harness.hpp"

namespace {

using namespace clash;

const std::vector<Document>& docs() {
  static const auto d = SyntheticCorpus(SyntheticCorpusConfig{}).generate(2000);
  return d;
}

const std::vector<TokenSeq>& tokens() {
  static const auto t = [] {
    std::vector<TokenSeq> out;
    for (const auto& d : docs()) out.push_back(tokenize(d.text, {}));
    return out;
  }();
  return t;
}

void BM_Tokenize(benchmark::State& state) {
  const TokenizerConfig config;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(docs()[i++ % docs().size()].text, config));
}
BENCHMARK(BM_Tokenize);

void BM_EmbedTf(benchmark::State& state) {
  const HashConfig config(static_cast<std::size_t>(state.range(0)), 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(embed_tf(tokens()[i++ % tokens().size()], config));
}
BENCHMARK(BM_EmbedTf)->Arg(1 << 12)->Arg(1 << 16);

void BM_EmbedTfIdf(benchmark::State& state) {
  IdfSketch sketch(HashConfig(static_cast<std::size_t>(state.range(0)), 1), static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sketch.embed_tfidf(tokens()[i++ % tokens().size()]));
}
BENCHMARK(BM_EmbedTfIdf)->Args({1 << 12, 1})->Args({1 << 12, 3})->Args({1 << 16, 1});

std::vector<HashedVector> embedded(std::size_t m) {
  IdfSketch sketch(HashConfig(m, 1));
  std::vector<HashedVector> out;
  for (const auto& t : tokens()) out.push_back(sketch.embed_tfidf(t));
  return out;
}

std::vector<LabelSet> label_sets() {
  LabelDictionary dict;
  std::vector<LabelSet> out;
  for (const auto& d : docs()) {
    LabelSet s;
    for (const auto& l : d.labels) s.insert(dict.intern(l));
    out.push_back(s);
  }
  return out;
}

void BM_Learner(benchmark::State& state, LearnerKind kind) {
  const std::size_t m = 1 << 12;
  const auto vs = embedded(m);
  const auto ls = label_sets();
  StreamConfig config;
  config.dim = m;
  config.learner = kind;
  auto learner = make_learner(config);
  for (std::size_t i = 0; i < 1000; ++i) learner->learn(vs[i], learner->predict(vs[i]), ls[i]);
  std::size_t i = 1000;
  for (auto _ : state) {
    const auto& v = vs[i % vs.size()];
    benchmark::DoNotOptimize(learner->predict(v));
    ++i;
  }
}
BENCHMARK_CAPTURE(BM_Learner, mode1_predict, LearnerKind::kMode1);
BENCHMARK_CAPTURE(BM_Learner, perceptron_predict, LearnerKind::kPerceptron);
BENCHMARK_CAPTURE(BM_Learner, knn1_predict_1000, LearnerKind::kKnn1);

void BM_StreamProcess(benchmark::State& state) {
  StreamConfig config;
  config.dim = static_cast<std::size_t>(state.range(0));
  config.learner = static_cast<LearnerKind>(state.range(1));
  StreamEngine engine(config);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(engine.process(docs()[i++ % docs().size()]));
}
BENCHMARK(BM_StreamProcess)
    ->Args({1 << 12, static_cast<int>(LearnerKind::kMode1)})
    ->Args({1 << 12, static_cast<int>(LearnerKind::kMode2)})
    ->Args({1 << 12, static_cast<int>(LearnerKind::kPerceptron)})
    ->Args({1 << 16, static_cast<int>(LearnerKind::kMode1)});

}  // namespace

BENCHMARK_MAIN();
