// Copyright 2026 The lexsimp Authors.
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

// Command-line driver for the lexsimp pipeline. Every stage goes through the
// C API in lexsimp.h.
#include <cstdio>
#include <deque>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexsimp.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct ConfigDeleter {
  void operator()(lexsimp_config *c) const { lexsimp_config_free(c); }
};
using ConfigPtr = std::unique_ptr<lexsimp_config, ConfigDeleter>;

// Thrown after a failed C call; carries the status for the exit code.
struct StageFailure {
  lexsimp_status status;
};

void Check(lexsimp_status status) {
  if (status == LEXSIMP_OK) return;
  std::cerr << "lexsimp: " << lexsimp_status_name(status) << ": " << lexsimp_last_error()
            << "\n";
  throw StageFailure{status};
}

int ExitCodeFor(lexsimp_status status) {
  return status == LEXSIMP_ERR_USAGE ? kExitUsage : kExitData;
}

// A flag that maps onto one configuration key. Only flags given on the
// command line or in the config file are forwarded.
struct KeyedOption {
  std::string key;
  std::string value;
  CLI::Option *option = nullptr;
};

lexsimp_corpus ParseCorpusOrThrow(const std::string &name) {
  lexsimp_corpus corpus;
  Check(lexsimp_parse_corpus(name.c_str(), &corpus));
  return corpus;
}

const char *OrNull(const std::string &s) { return s.empty() ? nullptr : s.c_str(); }

std::vector<const char *> CStrings(const std::vector<std::string> &items) {
  std::vector<const char *> out;
  for (const std::string &s : items) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Mine lexical simplifications from wiki revision histories."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the flags; flags take precedence");
  app.set_version_flag("--version", std::string(lexsimp_version()));

  // Global flags, one per configuration key. CLI11 binds to the stored
  // strings, so the container must not move its elements.
  std::deque<KeyedOption> keyed;
  auto keyed_flag = [&](const std::string &flag, const std::string &key,
                        const std::string &help, const std::string &default_text) {
    keyed.push_back({key, "", nullptr});
    KeyedOption &k = keyed.back();
    k.option = app.add_option(flag, k.value, help);
    if (!default_text.empty()) k.option->default_str(default_text);
  };
  keyed_flag("--workdir", "workdir", "directory holding the stage artifacts", ".");
  keyed_flag("--workers", "workers", "threads for extract, count and synth", "1");
  keyed_flag("--alpha", "alpha", "fix-rate damping factor", "1.0");
  keyed_flag("--min-pair-freq", "min_pair_freq", "edit model: minimum freq(A -> *)", "2");
  keyed_flag("--min-phrase-freq", "min_phrase_freq", "edit model: minimum freq(A)", "101");
  keyed_flag("--phrase-freq", "phrase_freq", "freq(A) unit: topics or occurrences", "topics");
  keyed_flag("--top-k", "top_k", "ranked rows to keep and K for evaluation (0 = all)", "100");
  keyed_flag("--rng-seed", "rng_seed", "seed for every random choice", "0");
  keyed_flag("--sampling", "sampling", "random baseline: distinct or weighted", "distinct");
  keyed_flag("--tau-align", "tau_align", "minimum sentence alignment similarity", "0.5");
  keyed_flag("--tau-identical", "tau_identical", "similarity treated as unchanged", "1.0");
  keyed_flag("--max-phrase-tokens", "max_phrase_tokens", "longest phrase kept", "5");
  keyed_flag("--format", "format", "ingest format: auto, xml or jsonl", "auto");
  keyed_flag("--strip-markup", "strip_markup", "strip wiki markup on ingest", "true");
  keyed_flag("--filter-textual", "filter_textual", "drop revisions without textual change",
             "true");
  keyed_flag("--dictionary", "dictionary", "transformation dictionary TSV", "");
  keyed_flag("--dictionary-sample", "dictionary_sample", "dictionary pairs added to a batch",
             "0");
  keyed_flag("--judges", "judges", "judge_id<TAB>group file", "");
  keyed_flag("--verdict-group", "verdict_group", "judge group deciding verdicts", "native");
  keyed_flag("--denominator", "denominator", "precision denominator: discard or k", "discard");
  keyed_flag("--topics", "topics", "synth: topics per corpus", "1000");
  keyed_flag("--complex-topics", "complex_topics", "synth: complex-corpus topics", "");
  keyed_flag("--simple-topics", "simple_topics", "synth: simple-corpus topics", "");
  keyed_flag("--distractors", "distractors", "synth: add unrelated edits", "false");
  keyed_flag("--allocation", "allocation", "synth: quota or bernoulli", "quota");
  keyed_flag("--trusted-comment-rate", "trusted_comment_rate",
             "synth: share of simplify revisions with a *simpl* comment", "0.5");
  keyed_flag("--noop-revisions", "noop_revisions", "synth: unchanged revisions per topic", "1");
  keyed_flag("--filler-sentences", "filler_sentences", "synth: sentences without a phrase",
             "2");
  keyed_flag("--planted", "planted", "synth: ground-truth TSV of planted phrases", "");

  std::vector<std::string> seed_patterns;
  CLI::Option *seed_option =
      app.add_option("--seed-pattern", seed_patterns,
                     "trusted comment glob for SIMPL (repeatable)")
          ->default_str("*simpl*");

  // ingest
  CLI::App *ingest = app.add_subcommand("ingest", "read a dump into the fixture format");
  std::string ingest_corpus, ingest_input, ingest_output;
  ingest->add_option("--corpus", ingest_corpus, "complex or simple")->required();
  ingest->add_option("--input,input", ingest_input, "MediaWiki XML export or JSONL fixture")
      ->required();
  ingest->add_option("--output", ingest_output, "defaults to <workdir>/<corpus>.jsonl");

  // extract
  CLI::App *extract = app.add_subcommand("extract", "extract lexical edit instances");
  std::vector<std::string> extract_corpora;
  extract->add_option("--corpus", extract_corpora, "corpora to process (default: both)");

  // count
  CLI::App *count = app.add_subcommand("count", "build the count store");
  std::string count_output;
  count->add_option("--output", count_output, "defaults to <workdir>/store.tsv");

  // rank
  CLI::App *rank = app.add_subcommand("rank", "rank simplification candidates");
  std::string rank_method, rank_input, rank_output;
  rank->add_option("--method", rank_method, "edit-model, simpl, frequent or random")
      ->required();
  rank->add_option("--input", rank_input, "store (edit model) or simple-corpus instances");
  rank->add_option("--output", rank_output, "defaults to <workdir>/ranked.<method>.tsv");

  // eval
  CLI::App *eval = app.add_subcommand("eval", "evaluation harness");
  eval->require_subcommand(1);
  CLI::App *batch = eval->add_subcommand("batch", "build a shuffled annotation batch");
  std::vector<std::string> batch_ranked;
  std::string batch_output;
  batch->add_option("--ranked", batch_ranked, "ranked candidate TSV (repeatable)")->required();
  batch->add_option("--output", batch_output, "manifest TSV")->required();

  CLI::App *report = eval->add_subcommand("report", "precision@K and agreement report");
  std::vector<std::string> report_ranked;
  std::string manifest, judgments, text_output, tsv_output;
  report->add_option("--ranked", report_ranked, "ranked candidate TSV (repeatable)")
      ->required();
  report->add_option("--manifest", manifest, "batch manifest TSV")->required();
  report->add_option("--judgments", judgments, "pair_id<TAB>judge_id<TAB>label")->required();
  report->add_option("--text-output", text_output, "write the table here as well");
  report->add_option("--tsv-output", tsv_output, "machine-readable report");

  // synth
  CLI::App *synth = app.add_subcommand("synth", "generate synthetic corpora with planted rates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    lexsimp_config *raw = nullptr;
    Check(lexsimp_config_new(&raw));
    ConfigPtr config(raw);
    for (const KeyedOption &k : keyed) {
      if (k.option->count() > 0) Check(lexsimp_config_set(config.get(), k.key.c_str(), k.value.c_str()));
    }
    if (seed_option->count() > 0) {
      std::string joined;
      for (const std::string &p : seed_patterns) {
        if (!joined.empty()) joined.push_back(',');
        joined += p;
      }
      Check(lexsimp_config_set(config.get(), "seed_pattern", joined.c_str()));
    }

    if (ingest->parsed()) {
      lexsimp_ingest_stats s{};
      Check(lexsimp_ingest(config.get(), ParseCorpusOrThrow(ingest_corpus), ingest_input.c_str(),
                           OrNull(ingest_output), &s));
      std::fprintf(stderr,
                   "ingest: %llu pages (%llu skipped), %llu revisions, %llu kept\n",
                   static_cast<unsigned long long>(s.pages_emitted),
                   static_cast<unsigned long long>(s.pages_skipped),
                   static_cast<unsigned long long>(s.revisions_read),
                   static_cast<unsigned long long>(s.revisions_kept));
    } else if (extract->parsed()) {
      if (extract_corpora.empty()) extract_corpora = {"complex", "simple"};
      for (const std::string &name : extract_corpora) {
        lexsimp_extract_stats s{};
        Check(lexsimp_extract(config.get(), ParseCorpusOrThrow(name), nullptr, nullptr, &s));
        std::fprintf(stderr, "extract %s: %llu articles, %llu revisions, %llu instances\n",
                     name.c_str(), static_cast<unsigned long long>(s.articles),
                     static_cast<unsigned long long>(s.revisions),
                     static_cast<unsigned long long>(s.instances));
      }
    } else if (count->parsed()) {
      lexsimp_count_stats s{};
      Check(lexsimp_count(config.get(), OrNull(count_output), &s));
      std::fprintf(stderr, "count: %llu articles, %llu phrases, %llu instances\n",
                   static_cast<unsigned long long>(s.articles),
                   static_cast<unsigned long long>(s.vocabulary),
                   static_cast<unsigned long long>(s.instances));
    } else if (rank->parsed()) {
      lexsimp_method method;
      Check(lexsimp_parse_method(rank_method.c_str(), &method));
      lexsimp_rank_stats s{};
      Check(lexsimp_rank(config.get(), method, OrNull(rank_input), OrNull(rank_output), &s));
      std::fprintf(stderr, "rank %s: %llu candidates from a pool of %llu\n",
                   rank_method.c_str(), static_cast<unsigned long long>(s.candidates),
                   static_cast<unsigned long long>(s.pool));
    } else if (batch->parsed()) {
      std::vector<const char *> paths = CStrings(batch_ranked);
      uint64_t pairs = 0;
      Check(lexsimp_eval_batch(config.get(), paths.data(), paths.size(), batch_output.c_str(),
                               &pairs));
      std::fprintf(stderr, "eval batch: %llu pairs\n", static_cast<unsigned long long>(pairs));
    } else if (report->parsed()) {
      std::vector<const char *> paths = CStrings(report_ranked);
      char *text = nullptr;
      Check(lexsimp_eval_report(config.get(), paths.data(), paths.size(), manifest.c_str(),
                                judgments.c_str(), OrNull(text_output), OrNull(tsv_output),
                                &text));
      std::fputs(text, stdout);
      lexsimp_string_free(text);
    } else if (synth->parsed()) {
      lexsimp_synth_stats s{};
      Check(lexsimp_synth(config.get(), &s));
      std::fprintf(stderr, "synth: %llu complex and %llu simple articles, %llu revisions\n",
                   static_cast<unsigned long long>(s.complex_articles),
                   static_cast<unsigned long long>(s.simple_articles),
                   static_cast<unsigned long long>(s.revisions));
    }
  } catch (const StageFailure &failure) {
    return ExitCodeFor(failure.status);
  }
  return 0;
}
