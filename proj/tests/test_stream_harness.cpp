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

#include <sstream>

#include "clash/baselines.hpp"
#include "clash/errors.hpp"
#include "clash/stream_harness.hpp"

namespace clash {
namespace {

std::string corpus_jsonl(std::size_t n, double unlabelled = 0.0) {
  SyntheticCorpusConfig config;
  config.unlabelled_fraction = unlabelled;
  SyntheticCorpus gen(config);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += to_jsonl(gen.next()) + "\n";
  return out;
}

StreamConfig small_config(LearnerKind learner = LearnerKind::kMode1) {
  StreamConfig c;
  c.dim = 512;
  c.learner = learner;
  c.snapshot_every = 100;
  return c;
}

std::string run_csv(const StreamConfig& config, const std::string& input, std::string* predictions = nullptr) {
  StreamEngine engine(config);
  std::istringstream in(input);
  std::ostringstream csv, preds;
  RunOptions options;
  options.timing = false;
  options.predictions = &preds;
  run_prequential(engine, in, csv, options);
  if (predictions) *predictions = preds.str();
  return csv.str();
}

TEST(Config, JsonRoundTrip) {
  StreamConfig c = small_config(LearnerKind::kPerceptron);
  c.scheme = Scheme::kTf;
  c.theta = 0.25;
  c.label_prob = 0.125;
  c.normalize = Normalization::kL2;
  c.stopwords = {"the", "a"};
  c.sketch_rows = 2;
  c.sign_seed = 99;
  const StreamConfig back = stream_config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_EQ(back.sign_seed, 99u);
  EXPECT_THROW(stream_config_from_json("{\"dim\": 3}"), FormatError);
}

TEST(Config, Validation) {
  StreamConfig c;
  c.label_prob = 1.5;
  EXPECT_THROW(c.validate(), ContractViolation);
  c = StreamConfig{};
  c.theta = 1.0;
  EXPECT_THROW(StreamEngine{c}, ContractViolation);
  c = StreamConfig{};
  c.dim = 0;
  EXPECT_THROW(c.validate(), ContractViolation);
}

TEST(Snapshots, DefaultCadence) {
  EXPECT_FALSE(is_snapshot_round(0, 0));
  EXPECT_TRUE(is_snapshot_round(500, 0));
  EXPECT_FALSE(is_snapshot_round(750, 0));
  EXPECT_TRUE(is_snapshot_round(20000, 0));
  EXPECT_FALSE(is_snapshot_round(20500, 0));
  EXPECT_TRUE(is_snapshot_round(25000, 0));
  EXPECT_TRUE(is_snapshot_round(30, 10));
}

TEST(Documents, Parse) {
  auto d = parse_document(R"({"id":"x","text":"Hi there","labels":["a","b"]})");
  ASSERT_TRUE(d);
  EXPECT_EQ(d->labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(parse_document(R"({"text":"no labels"})"));
  EXPECT_FALSE(parse_document("not json"));
  EXPECT_FALSE(parse_document(R"({"id":"x"})"));
  EXPECT_FALSE(parse_document(R"({"text":"t","labels":"a"})"));
  EXPECT_FALSE(parse_document(R"({"text":"t","labels":[1]})"));
  EXPECT_FALSE(parse_document(R"([1,2])"));
  const Document doc{"id-1", "caf\xC3\xA9 \"quoted\"", {"l"}};
  const auto back = parse_document(to_jsonl(doc));
  ASSERT_TRUE(back);
  EXPECT_EQ(back->text, doc.text);
}

TEST(Engine, LabelsInternedInArrivalOrder) {
  StreamEngine engine(small_config());
  engine.process({"1", "x y", {"sports", "news"}});
  engine.process({"2", "x y", {"arts", "sports"}});
  EXPECT_EQ(engine.labels().names(), (std::vector<std::string>{"sports", "news", "arts"}));
  EXPECT_EQ(engine.counters().labels(), 3u);
  EXPECT_EQ(engine.counters().at(2).tn, 1u);
}

TEST(Engine, UnlabelledDocumentsAreTestedNotTrained) {
  StreamEngine engine(small_config());
  const auto r = engine.process({"1", "some words here", {}});
  EXPECT_FALSE(r.trained);
  EXPECT_EQ(engine.rounds(), 1u);
  EXPECT_EQ(dynamic_cast<const ClasherModel&>(engine.learner()).trained_regions(), 0u);
}

TEST(Engine, TfIdfAbsorbsOncePerDocument) {
  StreamEngine engine(small_config());
  const std::string input = corpus_jsonl(50);
  std::istringstream in(input);
  for (const auto& d : read_documents(in)) engine.process(d);
  ASSERT_TRUE(engine.sketch());
  EXPECT_EQ(engine.sketch()->documents(), 50u);
}

TEST(Engine, PeekDoesNotMutate) {
  StreamEngine engine(small_config());
  engine.process({"1", "alpha beta", {"a"}});
  const std::string before = engine.save_to_string();
  engine.peek_embedding({"alpha", "gamma"});
  EXPECT_EQ(engine.save_to_string(), before);
}

TEST(Run, ZeroLabelProbabilityLeavesModelUntouched) {
  for (auto kind : {LearnerKind::kMode1, LearnerKind::kMode2, LearnerKind::kPerceptron, LearnerKind::kKnn1}) {
    StreamConfig c = small_config(kind);
    c.label_prob = 0.0;
    StreamEngine engine(c);
    const auto fresh = make_learner(c);
    std::istringstream in(corpus_jsonl(300));
    std::ostringstream csv;
    const auto report = run_prequential(engine, in, csv);
    EXPECT_EQ(report.documents, 300u);
    EXPECT_EQ(engine.rounds(), 300u);
    EXPECT_EQ(engine.learner().memory_bytes(), fresh->memory_bytes());
    EXPECT_TRUE(engine.learner().predict(HashedVector(c.dim)).empty());
    EXPECT_EQ(engine.counters().labels(), 10u);
  }
}

TEST(Run, DeterministicCsv) {
  const std::string input = corpus_jsonl(400);
  for (auto kind : {LearnerKind::kMode1, LearnerKind::kMode2, LearnerKind::kPerceptron, LearnerKind::kKnn1}) {
    StreamConfig c = small_config(kind);
    c.label_prob = 0.5;
    std::string pa, pb;
    EXPECT_EQ(run_csv(c, input, &pa), run_csv(c, input, &pb));
    EXPECT_EQ(pa, pb);
  }
}

TEST(Run, CsvLayout) {
  const std::string csv = run_csv(small_config(), corpus_jsonl(250));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# clasher-metrics v1");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# config {", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line,
            "round,micro_p,micro_r,micro_f1,macro_p,macro_r,macro_f1,accuracy,lat_median_us,"
            "lat_mean_us,model_bytes");
  std::vector<std::string> rounds;
  while (std::getline(in, line)) rounds.push_back(line.substr(0, line.find(',')));
  EXPECT_EQ(rounds, (std::vector<std::string>{"100", "200", "250"}));
}

TEST(Run, PredictionsAreCausal) {
  // The prediction for round t must not depend on anything after document t.
  const std::string input = corpus_jsonl(200);
  std::string full;
  run_csv(small_config(), input, &full);
  std::vector<std::string> full_lines;
  std::istringstream fl(full);
  for (std::string l; std::getline(fl, l);) full_lines.push_back(l);
  ASSERT_EQ(full_lines.size(), 200u);
  std::size_t pos = 0;
  for (std::size_t t = 1; t <= 200; ++t) {
    pos = input.find('\n', pos) + 1;
    if (t % 37 != 0) continue;
    std::string prefix;
    run_csv(small_config(), input.substr(0, pos), &prefix);
    std::istringstream pl(prefix);
    std::string last;
    for (std::string l; std::getline(pl, l);) last = l;
    EXPECT_EQ(last, full_lines[t - 1]);
  }
}

TEST(Run, MalformedLinesAreSkipped) {
  std::string input = corpus_jsonl(20);
  input.insert(input.find('\n') + 1, "{broken\n\n[1]\n");
  StreamEngine engine(small_config());
  std::istringstream in(input);
  std::ostringstream csv, warnings;
  RunOptions options;
  options.warnings = &warnings;
  const auto report = run_prequential(engine, in, csv, options);
  EXPECT_EQ(report.documents, 20u);
  EXPECT_EQ(report.skipped, 2u);
  EXPECT_NE(warnings.str().find("line 2"), std::string::npos);
}

TEST(Run, TimingColumnsAreFilled) {
  StreamEngine engine(small_config());
  std::istringstream in(corpus_jsonl(100));
  std::ostringstream csv;
  const auto report = run_prequential(engine, in, csv);
  ASSERT_EQ(report.snapshots.size(), 1u);
  EXPECT_GT(report.snapshots[0].latency_mean_us, 0.0);
  EXPECT_GT(report.snapshots[0].model_bytes, 0u);
}

TEST(Snapshot, ResumeMatchesUninterruptedRun) {
  const std::string input = corpus_jsonl(600);
  const auto split = [&](std::size_t n) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) pos = input.find('\n', pos) + 1;
    return pos;
  };
  const std::size_t cut = split(250);
  for (auto kind : {LearnerKind::kMode1, LearnerKind::kMode2, LearnerKind::kPerceptron, LearnerKind::kKnn1}) {
    for (auto scheme : {Scheme::kTf, Scheme::kTfIdf}) {
      StreamConfig c = small_config(kind);
      c.scheme = scheme;
      c.label_prob = 0.5;
      c.sketch_rows = 2;
      std::string full;
      run_csv(c, input, &full);

      StreamEngine first(c);
      std::istringstream in1(input.substr(0, cut));
      std::ostringstream csv1, p1;
      RunOptions o1;
      o1.timing = false;
      o1.predictions = &p1;
      run_prequential(first, in1, csv1, o1);
      std::istringstream saved(first.save_to_string());
      StreamEngine resumed = StreamEngine::load(saved);
      EXPECT_EQ(resumed.save_to_string(), first.save_to_string());

      std::istringstream in2(input.substr(cut));
      std::ostringstream csv2, p2;
      RunOptions o2 = o1;
      o2.predictions = &p2;
      run_prequential(resumed, in2, csv2, o2);
      EXPECT_EQ(p1.str() + p2.str(), full) << to_string(kind) << " " << to_string(scheme);
    }
  }
}

TEST(Snapshot, RejectsForeignDocuments) {
  std::istringstream bad("{\"format\":\"other\",\"version\":1}");
  EXPECT_THROW(StreamEngine::load(bad), FormatError);
  StreamEngine engine(small_config());
  std::string text = engine.save_to_string();
  text.replace(text.find("\"version\":1"), 11, "\"version\":9");
  std::istringstream future(text);
  EXPECT_THROW(StreamEngine::load(future), FormatError);
  std::istringstream garbage("not json");
  EXPECT_THROW(StreamEngine::load(garbage), FormatError);
}

TEST(Correlation, SingleExactRow) {
  std::vector<TokenSeq> corpus;
  SyntheticCorpus gen(SyntheticCorpusConfig{});
  for (int i = 0; i < 30; ++i) corpus.push_back(tokenize(gen.next().text, {}));
  CorrelationGrid grid;
  grid.dims = {1 << 8};
  grid.scheme_pairs = {{Scheme::kTf, HashedSide::kExact}};
  grid.seeds = {1};
  grid.pairs = 200;
  const auto rows = run_correlation(corpus, grid);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].rho, 1.0);
  std::ostringstream csv;
  write_correlation_csv(csv, grid, rows);
  EXPECT_NE(csv.str().find("m,exact_scheme,hashed_scheme,rho,seed\n256,tf,exact,1,1\n"), std::string::npos);
}

TEST(Correlation, FullGridRowCount) {
  std::vector<TokenSeq> corpus;
  SyntheticCorpus gen(SyntheticCorpusConfig{});
  for (int i = 0; i < 40; ++i) corpus.push_back(tokenize(gen.next().text, {}));
  CorrelationGrid grid;
  grid.pairs = 300;
  const auto rows = run_correlation(corpus, grid);
  EXPECT_EQ(rows.size(), 75u);
  const auto medians = median_over_seeds(rows);
  EXPECT_EQ(medians.size(), 15u);
  EXPECT_EQ(medians[0].m, 256u);
}

TEST(Correlation, MedianOverSeeds) {
  std::vector<CorrelationRow> rows;
  for (double r : {0.3, 0.9, 0.5}) rows.push_back({64, Scheme::kTf, HashedSide::kTf, r, 1});
  for (double r : {0.1, 0.2}) rows.push_back({128, Scheme::kTf, HashedSide::kTf, r, 1});
  const auto m = median_over_seeds(rows);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].rho, 0.5);
  EXPECT_DOUBLE_EQ(m[1].rho, 0.15);
}

}  // namespace
}  // namespace clash
