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

#include "clash/stream_harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "clash/baselines.hpp"
#include "clash/errors.hpp"
#include "json.hpp"

namespace clash {

using nlohmann::json;

namespace {

constexpr std::string_view kModelFormat = "clasher-model";

std::string_view similarity_name(Similarity s) {
  return s == Similarity::kDot ? "dot" : "sqdist";
}

Similarity parse_similarity(std::string_view name) {
  if (name == "sqdist") return Similarity::kSquaredDistance;
  if (name == "dot") return Similarity::kDot;
  throw ContractViolation("unknown similarity: " + std::string(name));
}

json config_json(const StreamConfig& c) {
  json j;
  j["dim"] = c.dim;
  j["scheme"] = to_string(c.scheme);
  j["learner"] = to_string(c.learner);
  j["theta"] = c.theta;
  j["similarity"] = similarity_name(c.similarity);
  j["dedupe"] = c.dedupe;
  j["learning_rate"] = c.learning_rate;
  j["seed"] = c.seed;
  j["sign_seed"] = c.hash_config().sign_seed();
  j["sketch_rows"] = c.sketch_rows;
  j["normalize"] = to_string(c.normalize);
  j["label_prob"] = c.label_prob;
  j["label_seed"] = c.label_seed;
  j["snapshot_every"] = c.snapshot_every;
  j["lowercase"] = c.lowercase;
  j["strip_punctuation"] = c.strip_punctuation;
  std::vector<std::string> stop = c.stopwords;
  std::sort(stop.begin(), stop.end());
  j["stopwords"] = stop;
  return j;
}

StreamConfig config_from(const json& j) {
  StreamConfig c;
  c.dim = j.at("dim").get<std::size_t>();
  c.scheme = parse_scheme(j.at("scheme").get<std::string>());
  c.learner = parse_learner_kind(j.at("learner").get<std::string>());
  c.theta = j.at("theta").get<double>();
  c.similarity = parse_similarity(j.at("similarity").get<std::string>());
  c.dedupe = j.at("dedupe").get<bool>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.sign_seed = j.at("sign_seed").get<std::uint64_t>();
  c.sketch_rows = j.at("sketch_rows").get<std::size_t>();
  c.normalize = parse_normalization(j.at("normalize").get<std::string>());
  c.label_prob = j.at("label_prob").get<double>();
  c.label_seed = j.at("label_seed").get<std::uint64_t>();
  c.snapshot_every = j.at("snapshot_every").get<std::size_t>();
  c.lowercase = j.at("lowercase").get<bool>();
  c.strip_punctuation = j.at("strip_punctuation").get<bool>();
  c.stopwords = j.at("stopwords").get<std::vector<std::string>>();
  c.validate();
  return c;
}

json vector_json(std::span<const double> v) { return json(std::vector<double>(v.begin(), v.end())); }

HashedVector vector_from(const json& j, std::size_t dim) {
  auto values = j.get<std::vector<double>>();
  if (values.size() != dim) throw FormatError("stored vector has the wrong dimension");
  return HashedVector(std::move(values));
}

json learner_json(const Learner& learner) {
  json j;
  j["kind"] = to_string(learner.kind());
  switch (learner.kind()) {
    case LearnerKind::kMode1:
    case LearnerKind::kMode2: {
      const auto& m = dynamic_cast<const ClasherModel&>(learner);
      json regions = json::array();
      for (const auto& r : m.regions()) {
        regions.push_back({{"count", r.count},
                           {"prototype", vector_json(r.prototype.values())},
                           {"stats", r.stats}});
      }
      j["regions"] = std::move(regions);
      break;
    }
    case LearnerKind::kPerceptron: {
      const auto& p = dynamic_cast<const PerceptronBR&>(learner);
      json weights = json::array();
      for (const auto& w : p.weights()) weights.push_back(vector_json(w.values()));
      j["weights"] = std::move(weights);
      break;
    }
    case LearnerKind::kKnn1: {
      const auto& k = dynamic_cast<const Knn1Store&>(learner);
      json entries = json::array();
      for (const auto& e : k.entries()) {
        std::vector<std::uint32_t> buckets;
        std::vector<double> values;
        for (const auto& [b, v] : e.vector.entries) {
          buckets.push_back(b);
          values.push_back(v);
        }
        entries.push_back({{"buckets", buckets}, {"values", values}, {"labels", e.labels.ids()}});
      }
      j["entries"] = std::move(entries);
      break;
    }
  }
  return j;
}

void restore_learner(Learner& learner, const json& j) {
  if (parse_learner_kind(j.at("kind").get<std::string>()) != learner.kind()) {
    throw FormatError("learner kind does not match the configuration");
  }
  const std::size_t dim = learner.dim();
  switch (learner.kind()) {
    case LearnerKind::kMode1:
    case LearnerKind::kMode2: {
      std::vector<Region> regions;
      for (const auto& r : j.at("regions")) {
        Region region;
        region.count = r.at("count").get<std::uint64_t>();
        region.prototype = vector_from(r.at("prototype"), dim);
        region.stats = r.at("stats").get<std::vector<double>>();
        regions.push_back(std::move(region));
      }
      dynamic_cast<ClasherModel&>(learner).restore(std::move(regions));
      break;
    }
    case LearnerKind::kPerceptron: {
      std::vector<HashedVector> weights;
      for (const auto& w : j.at("weights")) weights.push_back(vector_from(w, dim));
      dynamic_cast<PerceptronBR&>(learner).restore(std::move(weights));
      break;
    }
    case LearnerKind::kKnn1: {
      std::vector<Knn1Store::Entry> entries;
      for (const auto& e : j.at("entries")) {
        Knn1Store::Entry entry;
        entry.vector.dim = dim;
        const auto buckets = e.at("buckets").get<std::vector<std::uint32_t>>();
        const auto values = e.at("values").get<std::vector<double>>();
        if (buckets.size() != values.size()) throw FormatError("knn entry arrays differ in length");
        for (std::size_t i = 0; i < buckets.size(); ++i) {
          if (buckets[i] >= dim) throw FormatError("knn entry bucket out of range");
          entry.vector.entries.emplace_back(buckets[i], values[i]);
        }
        entry.labels = LabelSet(e.at("labels").get<std::vector<LabelId>>());
        entries.push_back(std::move(entry));
      }
      dynamic_cast<Knn1Store&>(learner).restore(std::move(entries));
      break;
    }
  }
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lo + hi);
}

std::string format_double(double x, const char* fmt = "%.9g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

}  // namespace

HashConfig StreamConfig::hash_config() const {
  return sign_seed ? HashConfig(dim, seed, *sign_seed) : HashConfig(dim, seed);
}

TokenizerConfig StreamConfig::tokenizer_config() const {
  return TokenizerConfig(lowercase, strip_punctuation,
                         std::unordered_set<std::string>(stopwords.begin(), stopwords.end()));
}

void StreamConfig::validate() const {
  (void)hash_config();
  if (!(theta >= 0.0 && theta < 1.0)) throw ContractViolation("theta must lie in [0, 1)");
  if (!(label_prob >= 0.0 && label_prob <= 1.0)) {
    throw ContractViolation("label_prob must lie in [0, 1]");
  }
  if (sketch_rows == 0) throw ContractViolation("sketch_rows must be >= 1");
  if (!(learning_rate > 0.0)) throw ContractViolation("learning_rate must be positive");
}

std::string to_json(const StreamConfig& config) { return config_json(config).dump(); }

StreamConfig stream_config_from_json(std::string_view text) {
  try {
    return config_from(json::parse(text));
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid stream config: ") + e.what());
  }
}

bool is_snapshot_round(std::uint64_t round, std::size_t snapshot_every) {
  if (round == 0) return false;
  if (snapshot_every > 0) return round % snapshot_every == 0;
  return round <= 20000 ? round % 500 == 0 : round % 5000 == 0;
}

std::optional<Document> parse_document(std::string_view line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  Document doc;
  auto text = j.find("text");
  if (text == j.end() || !text->is_string()) return std::nullopt;
  doc.text = text->get<std::string>();
  if (auto id = j.find("id"); id != j.end()) {
    if (!id->is_string()) return std::nullopt;
    doc.id = id->get<std::string>();
  }
  if (auto labels = j.find("labels"); labels != j.end()) {
    if (!labels->is_array()) return std::nullopt;
    for (const auto& l : *labels) {
      if (!l.is_string()) return std::nullopt;
      doc.labels.push_back(l.get<std::string>());
    }
  }
  return doc;
}

std::string to_jsonl(const Document& doc) {
  json j;
  j["id"] = doc.id;
  j["text"] = doc.text;
  j["labels"] = doc.labels;
  return j.dump();
}

std::unique_ptr<Learner> make_learner(const StreamConfig& config) {
  switch (config.learner) {
    case LearnerKind::kMode1:
    case LearnerKind::kMode2: {
      ClasherOptions o;
      o.theta = config.theta;
      o.mode2 = config.learner == LearnerKind::kMode2;
      o.similarity = config.similarity;
      o.dedupe = config.dedupe;
      return std::make_unique<ClasherModel>(config.dim, o);
    }
    case LearnerKind::kPerceptron:
      return std::make_unique<PerceptronBR>(config.dim, config.learning_rate);
    case LearnerKind::kKnn1:
      return std::make_unique<Knn1Store>(config.dim);
  }
  throw ContractViolation("unknown learner kind");
}

StreamEngine::StreamEngine(StreamConfig config)
    : config_((config.validate(), std::move(config))),
      tokenizer_(config_.tokenizer_config()),
      hash_(config_.hash_config()),
      learner_(make_learner(config_)),
      label_rng_(config_.label_seed) {
  if (config_.scheme == Scheme::kTfIdf) sketch_.emplace(hash_, config_.sketch_rows);
}

StreamEngine::StreamEngine(const StreamEngine& other)
    : config_(other.config_),
      tokenizer_(other.tokenizer_),
      hash_(other.hash_),
      sketch_(other.sketch_),
      learner_(other.learner_->clone()),
      labels_(other.labels_),
      counters_(other.counters_),
      label_rng_(other.label_rng_) {}

StreamEngine& StreamEngine::operator=(const StreamEngine& other) {
  if (this != &other) *this = StreamEngine(other);
  return *this;
}

StreamEngine::~StreamEngine() = default;

HashedVector StreamEngine::embed(const TokenSeq& tokens) {
  HashedVector v = sketch_ ? sketch_->embed_tfidf(tokens) : embed_tf(tokens, hash_);
  normalize(v, config_.normalize, tokens.size());
  return v;
}

HashedVector StreamEngine::peek_embedding(const TokenSeq& tokens) const {
  HashedVector v;
  if (sketch_) {
    IdfSketch copy = *sketch_;
    v = copy.embed_tfidf(tokens);
  } else {
    v = embed_tf(tokens, hash_);
  }
  normalize(v, config_.normalize, tokens.size());
  return v;
}

RoundResult StreamEngine::process(const Document& doc) {
  const TokenSeq tokens = tokenize(doc.text, tokenizer_);
  RoundResult r;
  for (const auto& name : doc.labels) r.truth.insert(labels_.intern(name));
  const HashedVector v = embed(tokens);
  r.predicted = learner_->predict(v);
  counters_.ensure_labels(labels_.size());
  counters_.record(r.predicted, r.truth);
  r.round = counters_.rounds();
  if (!r.truth.empty() && bernoulli(label_rng_, config_.label_prob)) {
    learner_->learn(v, r.predicted, r.truth);
    r.trained = true;
  }
  return r;
}

std::vector<std::string> StreamEngine::label_names(const LabelSet& labels) const {
  std::vector<std::string> names;
  for (LabelId id : labels) names.push_back(labels_.name(id));
  return names;
}

std::size_t StreamEngine::model_bytes() const {
  return learner_->memory_bytes() + (sketch_ ? sketch_->memory_bytes() : 0);
}

void StreamEngine::save(std::ostream& out) const {
  json j;
  j["format"] = kModelFormat;
  j["version"] = kModelFormatVersion;
  j["config"] = config_json(config_);
  j["labels"] = labels_.names();

  json counters = json::array();
  for (const auto& c : counters_.per_label()) counters.push_back({c.tp, c.fp, c.fn, c.tn});
  std::ostringstream rng;
  rng << label_rng_;
  j["stream"] = {{"rounds", counters_.rounds()}, {"label_rng", rng.str()}, {"counters", counters}};

  if (sketch_) {
    const auto& s = sketch_->sketch();
    j["sketch"] = {{"rows", s.rows()},
                   {"width", s.width()},
                   {"row_seeds", std::vector<std::uint64_t>(s.row_seeds().begin(), s.row_seeds().end())},
                   {"documents", sketch_->documents()},
                   {"counters", std::vector<std::uint64_t>(s.counters().begin(), s.counters().end())}};
  } else {
    j["sketch"] = nullptr;
  }
  j["model"] = learner_json(*learner_);
  out << j.dump() << '\n';
}

std::string StreamEngine::save_to_string() const {
  std::ostringstream out;
  save(out);
  return out.str();
}

StreamEngine StreamEngine::load(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("model snapshot is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kModelFormat) throw FormatError("not a model snapshot");
    if (j.at("version").get<int>() != kModelFormatVersion) {
      throw FormatError("unsupported model snapshot version");
    }
    StreamEngine engine(config_from(j.at("config")));
    for (const auto& name : j.at("labels")) engine.labels_.intern(name.get<std::string>());

    const auto& stream = j.at("stream");
    std::vector<Confusion> per_label;
    for (const auto& c : stream.at("counters")) {
      per_label.push_back({c.at(0).get<std::uint64_t>(), c.at(1).get<std::uint64_t>(),
                           c.at(2).get<std::uint64_t>(), c.at(3).get<std::uint64_t>()});
    }
    engine.counters_.restore(std::move(per_label), stream.at("rounds").get<std::uint64_t>());
    std::istringstream rng(stream.at("label_rng").get<std::string>());
    rng >> engine.label_rng_;
    if (!rng) throw FormatError("invalid labelling RNG state");

    const auto& sk = j.at("sketch");
    if (sk.is_null() != !engine.sketch_) throw FormatError("sketch presence does not match scheme");
    if (!sk.is_null()) {
      CountMinSketch cms(sk.at("width").get<std::size_t>(),
                         sk.at("row_seeds").get<std::vector<std::uint64_t>>(),
                         sk.at("counters").get<std::vector<std::uint64_t>>());
      engine.sketch_.emplace(engine.hash_, std::move(cms), sk.at("documents").get<std::uint64_t>());
    }
    restore_learner(*engine.learner_, j.at("model"));
    return engine;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed model snapshot: ") + e.what());
  }
}

void write_metrics_header(std::ostream& csv, const StreamConfig& config, std::string_view source) {
  csv << "# clasher-metrics v" << kMetricsCsvVersion << '\n';
  csv << "# config " << to_json(config) << '\n';
  if (!source.empty()) csv << "# source " << source << '\n';
  csv << "round,micro_p,micro_r,micro_f1,macro_p,macro_r,macro_f1,accuracy,lat_median_us,"
         "lat_mean_us,model_bytes\n";
}

void write_snapshot_row(std::ostream& csv, const Snapshot& s) {
  const auto& m = s.summary;
  csv << s.round << ',' << format_double(m.micro_p) << ',' << format_double(m.micro_r) << ','
      << format_double(m.micro_f1) << ',' << format_double(m.macro_p) << ','
      << format_double(m.macro_r) << ',' << format_double(m.macro_f1) << ','
      << format_double(m.accuracy) << ',' << format_double(s.latency_median_us, "%.3f") << ','
      << format_double(s.latency_mean_us, "%.3f") << ',' << s.model_bytes << '\n';
}

RunReport run_prequential(StreamEngine& engine, std::istream& in, std::ostream& csv,
                          const RunOptions& options) {
  using Clock = std::chrono::steady_clock;
  RunReport report;
  write_metrics_header(csv, engine.config(), options.source);

  std::vector<double> window;
  std::uint64_t last_snapshot = engine.rounds();
  const auto emit = [&] {
    Snapshot s;
    s.round = engine.rounds();
    s.summary = summarize(engine.counters());
    if (options.timing && !window.empty()) {
      s.latency_mean_us = std::accumulate(window.begin(), window.end(), 0.0) /
                          static_cast<double>(window.size());
      s.latency_median_us = median_of(window);
    }
    s.model_bytes = engine.model_bytes();
    write_snapshot_row(csv, s);
    report.snapshots.push_back(s);
    window.clear();
    last_snapshot = s.round;
  };

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto doc = parse_document(line);
    if (!doc) {
      ++report.skipped;
      if (options.warnings) *options.warnings << "warning: skipping malformed line " << line_no << '\n';
      continue;
    }
    const auto start = Clock::now();
    const RoundResult r = engine.process(*doc);
    const auto stop = Clock::now();
    if (options.timing) {
      window.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
    }
    ++report.documents;
    if (options.predictions) {
      json p;
      p["round"] = r.round;
      p["id"] = doc->id;
      p["predicted"] = engine.label_names(r.predicted);
      p["labels"] = engine.label_names(r.truth);
      p["trained"] = r.trained;
      *options.predictions << p.dump() << '\n';
    }
    if (is_snapshot_round(r.round, engine.config().snapshot_every)) emit();
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading the document stream");
  if (engine.rounds() > 0 && engine.rounds() != last_snapshot) emit();
  return report;
}

std::vector<CorrelationRow> run_correlation(const std::vector<TokenSeq>& corpus,
                                            const CorrelationGrid& grid) {
  CorrelationExperiment exp(corpus, grid.pairs, grid.pair_seed, grid.norm);
  std::vector<CorrelationRow> rows;
  for (auto m : grid.dims) {
    for (const auto& [exact, hashed] : grid.scheme_pairs) {
      for (auto seed : grid.seeds) {
        rows.push_back({m, exact, hashed, exp.rho(exact, hashed, m, seed), seed});
      }
    }
  }
  return rows;
}

void write_correlation_csv(std::ostream& csv, const CorrelationGrid& grid,
                           const std::vector<CorrelationRow>& rows) {
  json g;
  g["dims"] = grid.dims;
  json pairs = json::array();
  for (const auto& [e, h] : grid.scheme_pairs) pairs.push_back(to_string(e) + ":" + to_string(h));
  g["scheme_pairs"] = pairs;
  g["seeds"] = grid.seeds;
  g["pairs"] = grid.pairs;
  g["pair_seed"] = grid.pair_seed;
  g["normalize"] = to_string(grid.norm);
  csv << "# clasher-correlation v" << kCorrelationCsvVersion << '\n';
  csv << "# grid " << g.dump() << '\n';
  csv << "m,exact_scheme,hashed_scheme,rho,seed\n";
  for (const auto& r : rows) {
    csv << r.m << ',' << to_string(r.exact) << ',' << to_string(r.hashed) << ','
        << format_double(r.rho, "%.12g") << ',' << r.seed << '\n';
  }
}

std::vector<CorrelationRow> median_over_seeds(const std::vector<CorrelationRow>& rows) {
  std::vector<CorrelationRow> out;
  std::vector<std::vector<double>> groups;
  for (const auto& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CorrelationRow& o) {
      return o.m == r.m && o.exact == r.exact && o.hashed == r.hashed;
    });
    if (it == out.end()) {
      out.push_back({r.m, r.exact, r.hashed, 0.0, 0});
      groups.push_back({r.rho});
    } else {
      groups[static_cast<std::size_t>(it - out.begin())].push_back(r.rho);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rho = median_of(groups[i]);
  return out;
}

std::vector<Document> read_documents(std::istream& in, std::uint64_t* skipped) {
  std::vector<Document> docs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (auto doc = parse_document(line)) {
      docs.push_back(std::move(*doc));
    } else if (skipped) {
      ++*skipped;
    }
  }
  return docs;
}

}  // namespace clash
