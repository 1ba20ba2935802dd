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

// clasher: command-line front end for the streaming classifier.

#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clash/stream_harness.hpp"

namespace {

using namespace clash;

// "-" or empty means stdin / stdout.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw std::runtime_error("cannot open " + path);
  }
  std::istream& get() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }
  void close() {
    get().flush();
    if (!get()) throw std::runtime_error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct ConfigFlags {
  StreamConfig config;
  std::string scheme = "tfidf";
  std::string learner = "mode1";
  std::string normalize = "none";
  std::string stopwords;
  std::uint64_t sign_seed = 0;
  CLI::Option* sign_seed_opt = nullptr;

  std::vector<CLI::Option*> options;

  void add(CLI::App& app) {
    const std::size_t before = app.get_options().size();
    app.add_option("--dim", config.dim, "hashed dimension m")->capture_default_str();
    app.add_option("--scheme", scheme, "tf | tfidf")->capture_default_str();
    app.add_option("--learner", learner, "mode1 | mode2 | perceptron | knn1")->capture_default_str();
    app.add_option("--theta", config.theta, "label threshold in [0, 1)")->capture_default_str();
    app.add_option("--seed", config.seed, "bucket hash seed")->capture_default_str();
    sign_seed_opt = app.add_option("--sign-seed", sign_seed, "sign hash seed (derived from --seed if unset)");
    app.add_option("--sketch-rows", config.sketch_rows, "count-min rows for the IDF sketch")
        ->capture_default_str();
    app.add_option("--label-prob", config.label_prob, "probability a labelled document is trained on")
        ->capture_default_str();
    app.add_option("--label-seed", config.label_seed, "seed for the labelling coin")->capture_default_str();
    app.add_option("--snapshot-every", config.snapshot_every,
                   "rounds between metric snapshots (0: 500 up to 20000, then 5000)")
        ->capture_default_str();
    app.add_option("--normalize", normalize, "none | l2 | l1")->capture_default_str();
    app.add_flag("--dedupe", config.dedupe, "mode2: update a region at most once per document");
    app.add_flag("--dot", [this](std::int64_t) { config.similarity = Similarity::kDot; },
                 "map by dot product instead of squared distance");
    app.add_option("--learning-rate", config.learning_rate, "perceptron step size")->capture_default_str();
    app.add_option("--stopwords", stopwords, "stopword file, one word per line");
    const auto all = app.get_options();
    options.assign(all.begin() + static_cast<std::ptrdiff_t>(before), all.end());
  }

  bool any_given() const {
    for (const auto* o : options) {
      if (o->count() > 0) return true;
    }
    return false;
  }

  StreamConfig resolve() {
    config.scheme = parse_scheme(scheme);
    config.learner = parse_learner_kind(learner);
    config.normalize = parse_normalization(normalize);
    if (sign_seed_opt->count() > 0) config.sign_seed = sign_seed;
    if (!stopwords.empty()) {
      const auto words = load_stopwords(stopwords);
      config.stopwords.assign(words.begin(), words.end());
    }
    config.validate();
    return config;
  }
};

StreamEngine load_engine(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return StreamEngine::load(in);
}

void save_engine(const StreamEngine& engine, const std::string& path) {
  Output out(path);
  engine.save(out.get());
  out.close();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming multi-label text classification by clashing"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "prequential test-then-train over a JSON-lines stream");
  ConfigFlags run_flags;
  run_flags.add(*run);
  std::string run_in, run_out, run_model_in, run_model_out, run_predictions;
  bool no_timing = false;
  run->add_option("--in", run_in, "input JSON-lines (default stdin)");
  run->add_option("--out", run_out, "metrics CSV (default stdout)");
  run->add_option("--model-in", run_model_in, "resume from a model snapshot; its config is used");
  run->add_option("--model-out", run_model_out, "write the final model snapshot");
  run->add_option("--predictions", run_predictions, "per-round predictions as JSON lines");
  run->add_flag("--no-timing", no_timing, "write 0 in the latency columns");

  // correlate
  auto* correlate = app.add_subcommand("correlate", "Gram-matrix correlation between exact and hashed spaces");
  std::string cor_in, cor_out, cor_normalize = "none", cor_stopwords;
  CorrelationGrid grid;
  std::vector<std::string> cor_schemes;
  correlate->add_option("--in", cor_in, "corpus JSON-lines (default stdin)");
  correlate->add_option("--out", cor_out, "correlation CSV (default stdout)");
  correlate->add_option("--dim", grid.dims, "hashed dimensions")->capture_default_str();
  correlate->add_option("--seed", grid.seeds, "hash seeds")->capture_default_str();
  correlate->add_option("--pairs", grid.pairs, "sampled document pairs")->capture_default_str();
  correlate->add_option("--pair-seed", grid.pair_seed, "seed for pair sampling")->capture_default_str();
  correlate->add_option("--scheme", cor_schemes,
                        "exact:hashed pairs, e.g. tf:tf tfidf:tf tfidf:tfidf tf:exact");
  correlate->add_option("--normalize", cor_normalize, "none | l2 | l1")->capture_default_str();
  correlate->add_option("--stopwords", cor_stopwords, "stopword file");

  // gen-corpus
  auto* gen = app.add_subcommand("gen-corpus", "write a synthetic multi-label corpus as JSON lines");
  SyntheticCorpusConfig gen_config;
  std::size_t gen_docs = 20000;
  std::string gen_out;
  gen->add_option("--docs", gen_docs, "number of documents")->capture_default_str();
  gen->add_option("--seed", gen_config.seed, "generator seed")->capture_default_str();
  gen->add_option("--vocab", gen_config.vocab_size, "vocabulary size")->capture_default_str();
  gen->add_option("--topical-fraction", gen_config.topical_fraction, "share of topic words")
      ->capture_default_str();
  gen->add_option("--child-fraction", gen_config.child_fraction, "share of two-label documents")
      ->capture_default_str();
  gen->add_option("--topic-skew", gen_config.topic_skew, "Zipf exponent over topic prevalence")
      ->capture_default_str();
  gen->add_option("--unlabelled-fraction", gen_config.unlabelled_fraction, "share without labels")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output JSON-lines (default stdout)");

  // dump-model / load-model
  auto* dump = app.add_subcommand("dump-model", "print a model snapshot summary");
  std::string dump_in, dump_out;
  bool dump_full = false;
  dump->add_option("--model-in", dump_in, "model snapshot")->required();
  dump->add_option("--out", dump_out, "output (default stdout)");
  dump->add_flag("--full", dump_full, "print the whole snapshot instead of a summary");

  auto* load = app.add_subcommand("load-model", "validate a model snapshot and rewrite it");
  std::string load_in, load_out;
  load->add_option("--model-in", load_in, "model snapshot")->required();
  load->add_option("--model-out", load_out, "canonical copy of the snapshot");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (!run_model_in.empty() && run_flags.any_given()) {
        throw std::runtime_error("model settings come from --model-in; drop the other config flags");
      }
      StreamEngine engine = run_model_in.empty() ? StreamEngine(run_flags.resolve())
                                                 : load_engine(run_model_in);
      Input in(run_in);
      Output csv(run_out);
      std::unique_ptr<Output> predictions;
      if (!run_predictions.empty()) predictions = std::make_unique<Output>(run_predictions);
      RunOptions options;
      options.timing = !no_timing;
      options.warnings = &std::cerr;
      options.predictions = predictions ? &predictions->get() : nullptr;
      options.source = "in=" + (run_in.empty() ? std::string("-") : run_in);
      if (!run_model_in.empty()) options.source += " model_in=" + run_model_in;
      const RunReport report = run_prequential(engine, in.get(), csv.get(), options);
      csv.close();
      if (predictions) predictions->close();
      if (!run_model_out.empty()) save_engine(engine, run_model_out);
      std::cerr << "processed " << report.documents << " documents";
      if (report.skipped > 0) std::cerr << ", skipped " << report.skipped << " malformed lines";
      std::cerr << '\n';
    } else if (*correlate) {
      grid.norm = parse_normalization(cor_normalize);
      if (!cor_schemes.empty()) {
        grid.scheme_pairs.clear();
        for (const auto& s : cor_schemes) {
          const auto colon = s.find(':');
          if (colon == std::string::npos) throw std::runtime_error("scheme pair needs exact:hashed: " + s);
          grid.scheme_pairs.emplace_back(parse_scheme(s.substr(0, colon)),
                                         parse_hashed_side(s.substr(colon + 1)));
        }
      }
      TokenizerConfig tokenizer;
      if (!cor_stopwords.empty()) tokenizer = TokenizerConfig(true, true, load_stopwords(cor_stopwords));
      Input in(cor_in);
      std::uint64_t skipped = 0;
      std::vector<TokenSeq> corpus;
      for (const auto& doc : read_documents(in.get(), &skipped)) corpus.push_back(tokenize(doc.text, tokenizer));
      if (skipped > 0) std::cerr << "warning: skipped " << skipped << " malformed lines\n";
      Output out(cor_out);
      write_correlation_csv(out.get(), grid, run_correlation(corpus, grid));
      out.close();
    } else if (*gen) {
      SyntheticCorpus corpus(gen_config);
      Output out(gen_out);
      for (std::size_t i = 0; i < gen_docs; ++i) out.get() << to_jsonl(corpus.next()) << '\n';
      out.close();
    } else if (*dump) {
      const StreamEngine engine = load_engine(dump_in);
      Output out(dump_out);
      if (dump_full) {
        engine.save(out.get());
      } else {
        auto& o = out.get();
        o << "config " << to_json(engine.config()) << '\n';
        o << "rounds " << engine.rounds() << '\n';
        o << "labels " << engine.labels().size() << '\n';
        for (std::size_t i = 0; i < engine.labels().size(); ++i) {
          o << "  " << i << ' ' << engine.labels().name(static_cast<LabelId>(i)) << '\n';
        }
        o << "model_bytes " << engine.model_bytes() << '\n';
        if (engine.rounds() > 0) {
          const Summary s = summarize(engine.counters());
          o << "micro_f1 " << s.micro_f1 << "\nmacro_f1 " << s.macro_f1 << '\n';
        }
      }
      out.close();
    } else if (*load) {
      const StreamEngine engine = load_engine(load_in);
      if (!load_out.empty()) save_engine(engine, load_out);
      std::cerr << "ok: " << engine.rounds() << " rounds, " << engine.labels().size() << " labels\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
