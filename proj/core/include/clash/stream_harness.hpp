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

// Prequential (test-then-train) driver over a JSON-lines document stream.
//
// Per document: tokenize, embed (hashed TF, or hashed TF-IDF which also
// absorbs the document into the IDF sketch), predict, record metrics, and
// then, for labelled documents that win the Bernoulli(label_prob) draw,
// learn. Each document is read once.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clash/clasher.hpp"
#include "clash/geometry_eval.hpp"
#include "clash/hash_embed.hpp"
#include "clash/idf_sketch.hpp"
#include "clash/labels.hpp"
#include "clash/learner.hpp"
#include "clash/metrics.hpp"
#include "clash/random.hpp"
#include "clash/synthetic_corpus.hpp"
#include "clash/text_pipeline.hpp"

namespace clash {

inline constexpr int kMetricsCsvVersion = 1;
inline constexpr int kModelFormatVersion = 1;
inline constexpr int kCorrelationCsvVersion = 1;

struct StreamConfig {
  std::size_t dim = 4096;
  Scheme scheme = Scheme::kTfIdf;
  LearnerKind learner = LearnerKind::kMode1;
  double theta = 0.5;
  Similarity similarity = Similarity::kSquaredDistance;
  bool dedupe = false;
  double learning_rate = 0.1;
  std::uint64_t seed = 1;
  /// Derived from `seed` when unset.
  std::optional<std::uint64_t> sign_seed;
  std::size_t sketch_rows = 1;
  Normalization normalize = Normalization::kNone;
  double label_prob = 1.0;
  std::uint64_t label_seed = 1;
  /// 0 selects the default cadence: every 500 rounds up to 20000, then every 5000.
  std::size_t snapshot_every = 0;
  bool lowercase = true;
  bool strip_punctuation = true;
  std::vector<std::string> stopwords;

  HashConfig hash_config() const;
  TokenizerConfig tokenizer_config() const;
  /// Throws ContractViolation on out-of-range fields.
  void validate() const;
};

/// Compact JSON form used in output headers and model snapshots.
std::string to_json(const StreamConfig& config);
StreamConfig stream_config_from_json(std::string_view json);

bool is_snapshot_round(std::uint64_t round, std::size_t snapshot_every);

/// Parses one JSON-lines record: {"id": str, "text": str, "labels": [str]}.
/// Returns nullopt when the line is not a valid record.
std::optional<Document> parse_document(std::string_view line);
std::string to_jsonl(const Document& doc);

struct RoundResult {
  std::uint64_t round = 0;
  LabelSet predicted;
  LabelSet truth;
  bool trained = false;
};

class StreamEngine {
 public:
  explicit StreamEngine(StreamConfig config);
  StreamEngine(const StreamEngine& other);
  StreamEngine& operator=(const StreamEngine& other);
  StreamEngine(StreamEngine&&) noexcept = default;
  StreamEngine& operator=(StreamEngine&&) noexcept = default;
  ~StreamEngine();

  const StreamConfig& config() const { return config_; }
  const Learner& learner() const { return *learner_; }
  const LabelCounters& counters() const { return counters_; }
  const LabelDictionary& labels() const { return labels_; }
  const std::optional<IdfSketch>& sketch() const { return sketch_; }
  std::uint64_t rounds() const { return counters_.rounds(); }

  /// Embeds without touching any state; TF-IDF uses a copy of the sketch.
  HashedVector peek_embedding(const TokenSeq& tokens) const;

  RoundResult process(const Document& doc);
  std::vector<std::string> label_names(const LabelSet& labels) const;

  /// Learner plus sketch footprint.
  std::size_t model_bytes() const;

  /// Versioned JSON snapshot: config, label dictionary, stream position,
  /// labelling RNG state, metric counters, sketch and learner state.
  void save(std::ostream& out) const;
  static StreamEngine load(std::istream& in);
  std::string save_to_string() const;

 private:
  HashedVector embed(const TokenSeq& tokens);

  StreamConfig config_;
  TokenizerConfig tokenizer_;
  HashConfig hash_;
  std::optional<IdfSketch> sketch_;
  std::unique_ptr<Learner> learner_;
  LabelDictionary labels_;
  LabelCounters counters_;
  Rng label_rng_;
};

std::unique_ptr<Learner> make_learner(const StreamConfig& config);

struct Snapshot {
  std::uint64_t round = 0;
  Summary summary;
  double latency_median_us = 0;
  double latency_mean_us = 0;
  std::size_t model_bytes = 0;
};

struct RunOptions {
  /// Wall-clock latency columns; when false they are written as 0 so the
  /// CSV is a pure function of config and input.
  bool timing = true;
  std::ostream* predictions = nullptr;
  std::ostream* warnings = nullptr;
  /// Free-form provenance (input/output paths) recorded in the CSV header.
  std::string source;
};

struct RunReport {
  std::uint64_t documents = 0;
  std::uint64_t skipped = 0;
  std::vector<Snapshot> snapshots;
};

void write_metrics_header(std::ostream& csv, const StreamConfig& config, std::string_view source);
void write_snapshot_row(std::ostream& csv, const Snapshot& s);

/// Streams `in` through `engine`, writing the metrics CSV (header included)
/// to `csv`. Malformed lines are skipped and counted.
RunReport run_prequential(StreamEngine& engine, std::istream& in, std::ostream& csv,
                          const RunOptions& options = {});

struct CorrelationRow {
  std::size_t m;
  Scheme exact;
  HashedSide hashed;
  double rho;
  std::uint64_t seed;
};

struct CorrelationGrid {
  std::vector<std::size_t> dims = {1u << 8, 1u << 10, 1u << 12, 1u << 14, 1u << 16};
  std::vector<std::pair<Scheme, HashedSide>> scheme_pairs = {
      {Scheme::kTf, HashedSide::kTf},
      {Scheme::kTfIdf, HashedSide::kTf},
      {Scheme::kTfIdf, HashedSide::kTfIdf}};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::size_t pairs = 200000;
  std::uint64_t pair_seed = 7;
  Normalization norm = Normalization::kNone;
};

/// One row per (m, scheme pair, seed), in that nesting order.
std::vector<CorrelationRow> run_correlation(const std::vector<TokenSeq>& corpus,
                                            const CorrelationGrid& grid);
void write_correlation_csv(std::ostream& csv, const CorrelationGrid& grid,
                           const std::vector<CorrelationRow>& rows);

/// Median over seeds of each (m, scheme pair) group, in grid order.
std::vector<CorrelationRow> median_over_seeds(const std::vector<CorrelationRow>& rows);

std::vector<Document> read_documents(std::istream& in, std::uint64_t* skipped = nullptr);

}  // namespace clash
