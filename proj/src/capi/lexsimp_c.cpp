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

#include "lexsimp.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "core/candidates_io.hpp"
#include "core/common.hpp"
#include "core/edit_model.hpp"
#include "core/extract.hpp"
#include "core/instance_store.hpp"
#include "core/markup.hpp"
#include "core/pipeline.hpp"
#include "core/synth.hpp"
#include "core/tokenize.hpp"

struct lexsimp_config {
  std::string workdir = ".";
  size_t workers = 1;
  lexsimp::ModelConfig model;
  std::vector<std::string> seed_patterns = {"*simpl*"};
  uint64_t rng_seed = 0;
  lexsimp::RandomSampling sampling = lexsimp::RandomSampling::kDistinct;
  lexsimp::ExtractConfig extract;
  lexsimp::DumpFormat format = lexsimp::DumpFormat::kAuto;
  bool strip_markup = true;
  bool filter_textual = true;
  std::string dictionary;
  size_t dictionary_sample = 0;
  std::string judges;
  std::string verdict_group = "native";
  lexsimp::PrecisionDenominator denominator = lexsimp::PrecisionDenominator::kDiscardAdjusted;
  lexsimp::GeneratorSpec synth = lexsimp::GeneratorSpec::Default();
  std::string planted;

  std::map<std::string, std::string> values;  // last accepted raw value per key
};

struct lexsimp_store {
  lexsimp::EditInstanceStore store;
};

struct lexsimp_estimate {
  lexsimp::PhraseEstimate estimate;
};

struct lexsimp_candidates {
  std::vector<lexsimp::SimplificationCandidate> items;
};

namespace {

using lexsimp::Error;
using lexsimp::ErrorKind;
using lexsimp::ThrowUsage;

thread_local std::string last_error;

lexsimp_status StatusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return LEXSIMP_ERR_USAGE;
    case ErrorKind::kData: return LEXSIMP_ERR_DATA;
    case ErrorKind::kIo: return LEXSIMP_ERR_IO;
    case ErrorKind::kMissingInput: return LEXSIMP_ERR_MISSING_INPUT;
  }
  return LEXSIMP_ERR_INTERNAL;
}

lexsimp_status Fail(lexsimp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Fn>
lexsimp_status Guard(Fn &&body) {
  try {
    return body();
  } catch (const Error &e) {
    return Fail(StatusOf(e.kind()), e.what());
  } catch (const std::bad_alloc &) {
    return Fail(LEXSIMP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Fail(LEXSIMP_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(LEXSIMP_ERR_INTERNAL, "unknown error");
  }
}

void Require(const void *p, const char *what) {
  if (p == nullptr) ThrowUsage(std::string(what) + " must not be NULL");
}

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string PathOr(const char *path, const std::string &fallback) {
  return path != nullptr && *path != '\0' ? std::string(path) : fallback;
}

lexsimp::Corpus ToCorpus(lexsimp_corpus corpus) {
  if (corpus == LEXSIMP_CORPUS_COMPLEX) return lexsimp::Corpus::kComplex;
  if (corpus == LEXSIMP_CORPUS_SIMPLE) return lexsimp::Corpus::kSimple;
  ThrowUsage("invalid corpus value " + std::to_string(static_cast<int>(corpus)));
}

lexsimp::Method ToMethod(lexsimp_method method) {
  switch (method) {
    case LEXSIMP_METHOD_EDIT_MODEL: return lexsimp::Method::kEditModel;
    case LEXSIMP_METHOD_SIMPL: return lexsimp::Method::kSimpl;
    case LEXSIMP_METHOD_FREQUENT: return lexsimp::Method::kFrequent;
    case LEXSIMP_METHOD_RANDOM: return lexsimp::Method::kRandom;
  }
  ThrowUsage("invalid method value " + std::to_string(static_cast<int>(method)));
}

lexsimp_method FromMethod(lexsimp::Method method) {
  return static_cast<lexsimp_method>(static_cast<int>(method));
}

bool ParseBool(const std::string &key, const std::string &value) {
  std::string v = lexsimp::AsciiLower(value);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  ThrowUsage(key + ": expected a boolean, got '" + value + "'");
}

uint64_t ParseCount(const std::string &key, const std::string &value) {
  try {
    return lexsimp::ParseUnsigned(value, key);
  } catch (const Error &e) {
    ThrowUsage(e.what());
  }
}

double ParseReal(const std::string &key, const std::string &value) {
  try {
    return lexsimp::ParseDouble(value, key);
  } catch (const Error &e) {
    ThrowUsage(e.what());
  }
}

double ParseUnit(const std::string &key, const std::string &value) {
  double v = ParseReal(key, value);
  if (!(v >= 0.0 && v <= 1.0)) ThrowUsage(key + " must lie in [0, 1], got " + value);
  return v;
}

using Setter = std::function<void(lexsimp_config &, const std::string &, const std::string &)>;

const std::map<std::string, Setter> &Setters() {
  static const std::map<std::string, Setter> setters = {
      {"workdir", [](auto &c, auto &, auto &v) { c.workdir = v.empty() ? "." : v; }},
      {"workers",
       [](auto &c, auto &k, auto &v) {
         uint64_t n = ParseCount(k, v);
         if (n == 0 || n > 1024) ThrowUsage("workers must lie in [1, 1024]");
         c.workers = n;
       }},
      {"alpha", [](auto &c, auto &k, auto &v) {
         c.model.alpha = ParseUnit(k, v);
         c.synth.alpha = c.model.alpha;
       }},
      {"min_pair_freq", [](auto &c, auto &k, auto &v) { c.model.min_pair_freq = ParseCount(k, v); }},
      {"min_phrase_freq",
       [](auto &c, auto &k, auto &v) { c.model.min_phrase_freq = ParseCount(k, v); }},
      {"phrase_freq",
       [](auto &c, auto &k, auto &v) {
         if (v == "topics") {
           c.model.phrase_freq = lexsimp::PhraseFreqMode::kTopics;
         } else if (v == "occurrences") {
           c.model.phrase_freq = lexsimp::PhraseFreqMode::kOccurrences;
         } else {
           ThrowUsage(k + ": expected topics or occurrences");
         }
       }},
      {"top_k", [](auto &c, auto &k, auto &v) { c.model.top_k = ParseCount(k, v); }},
      {"seed_pattern",
       [](auto &c, auto &k, auto &v) {
         std::vector<std::string> patterns;
         size_t start = 0;
         while (start <= v.size()) {
           size_t comma = v.find(',', start);
           std::string p = v.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
           if (!p.empty()) patterns.push_back(p);
           if (comma == std::string::npos) break;
           start = comma + 1;
         }
         if (patterns.empty()) ThrowUsage(k + ": at least one pattern is required");
         c.seed_patterns = std::move(patterns);
       }},
      {"rng_seed", [](auto &c, auto &k, auto &v) {
         c.rng_seed = ParseCount(k, v);
         c.synth.seed = c.rng_seed;
       }},
      {"sampling",
       [](auto &c, auto &k, auto &v) {
         if (v == "distinct") {
           c.sampling = lexsimp::RandomSampling::kDistinct;
         } else if (v == "weighted") {
           c.sampling = lexsimp::RandomSampling::kWeighted;
         } else {
           ThrowUsage(k + ": expected distinct or weighted");
         }
       }},
      {"tau_align", [](auto &c, auto &k, auto &v) { c.extract.tau_align = ParseUnit(k, v); }},
      {"tau_identical",
       [](auto &c, auto &k, auto &v) { c.extract.tau_identical = ParseUnit(k, v); }},
      {"max_phrase_tokens",
       [](auto &c, auto &k, auto &v) {
         uint64_t n = ParseCount(k, v);
         if (n == 0) ThrowUsage(k + " must be positive");
         c.extract.max_phrase_tokens = n;
       }},
      {"format",
       [](auto &c, auto &k, auto &v) {
         if (v == "auto") {
           c.format = lexsimp::DumpFormat::kAuto;
         } else if (v == "xml") {
           c.format = lexsimp::DumpFormat::kMediaWikiXml;
         } else if (v == "jsonl") {
           c.format = lexsimp::DumpFormat::kJsonl;
         } else {
           ThrowUsage(k + ": expected auto, xml or jsonl");
         }
       }},
      {"strip_markup", [](auto &c, auto &k, auto &v) { c.strip_markup = ParseBool(k, v); }},
      {"filter_textual", [](auto &c, auto &k, auto &v) { c.filter_textual = ParseBool(k, v); }},
      {"dictionary", [](auto &c, auto &, auto &v) { c.dictionary = v; }},
      {"dictionary_sample",
       [](auto &c, auto &k, auto &v) { c.dictionary_sample = ParseCount(k, v); }},
      {"judges", [](auto &c, auto &, auto &v) { c.judges = v; }},
      {"verdict_group", [](auto &c, auto &, auto &v) { c.verdict_group = v; }},
      {"denominator",
       [](auto &c, auto &k, auto &v) {
         if (v == "discard") {
           c.denominator = lexsimp::PrecisionDenominator::kDiscardAdjusted;
         } else if (v == "k") {
           c.denominator = lexsimp::PrecisionDenominator::kK;
         } else {
           ThrowUsage(k + ": expected discard or k");
         }
       }},
      {"topics",
       [](auto &c, auto &k, auto &v) {
         c.synth.complex_topics = c.synth.simple_topics = ParseCount(k, v);
       }},
      {"complex_topics",
       [](auto &c, auto &k, auto &v) { c.synth.complex_topics = ParseCount(k, v); }},
      {"simple_topics",
       [](auto &c, auto &k, auto &v) { c.synth.simple_topics = ParseCount(k, v); }},
      {"distractors", [](auto &c, auto &k, auto &v) { c.synth.distractors = ParseBool(k, v); }},
      {"allocation",
       [](auto &c, auto &k, auto &v) {
         if (v == "quota") {
           c.synth.allocation = lexsimp::Allocation::kQuota;
         } else if (v == "bernoulli") {
           c.synth.allocation = lexsimp::Allocation::kBernoulli;
         } else {
           ThrowUsage(k + ": expected quota or bernoulli");
         }
       }},
      {"trusted_comment_rate",
       [](auto &c, auto &k, auto &v) { c.synth.trusted_comment_rate = ParseUnit(k, v); }},
      {"noop_revisions",
       [](auto &c, auto &k, auto &v) { c.synth.noop_revisions = ParseCount(k, v); }},
      {"filler_sentences",
       [](auto &c, auto &k, auto &v) { c.synth.filler_sentences = ParseCount(k, v); }},
      {"planted", [](auto &c, auto &, auto &v) { c.planted = v; }},
  };
  return setters;
}

lexsimp::RankRequest MakeRankRequest(const lexsimp_config &config, lexsimp::Method method,
                                     const char *input) {
  lexsimp::RankRequest request;
  request.method = method;
  if (method == lexsimp::Method::kEditModel) {
    request.store = PathOr(input, lexsimp::StorePath(config.workdir));
  } else {
    request.instances =
        PathOr(input, lexsimp::InstancesPath(config.workdir, lexsimp::Corpus::kSimple));
  }
  request.model = config.model;
  request.seed_patterns = config.seed_patterns;
  request.rng_seed = config.rng_seed;
  request.sampling = config.sampling;
  return request;
}

std::vector<std::string> PathList(const char *const *paths, size_t n) {
  if (n > 0) Require(paths, "ranked");
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    Require(paths[i], "ranked path");
    out.emplace_back(paths[i]);
  }
  if (out.empty()) ThrowUsage("at least one ranked candidate file is required");
  return out;
}

// Raw values reported by lexsimp_config_get before a key is set.
const std::map<std::string, std::string> &Defaults() {
  static const std::map<std::string, std::string> defaults = {
      {"workdir", "."},          {"workers", "1"},
      {"alpha", "1"},            {"min_pair_freq", "2"},
      {"min_phrase_freq", "101"}, {"phrase_freq", "topics"},
      {"top_k", "100"},          {"seed_pattern", "*simpl*"},
      {"rng_seed", "0"},         {"sampling", "distinct"},
      {"tau_align", "0.5"},      {"tau_identical", "1"},
      {"max_phrase_tokens", "5"}, {"format", "auto"},
      {"strip_markup", "true"},  {"filter_textual", "true"},
      {"dictionary", ""},        {"dictionary_sample", "0"},
      {"judges", ""},            {"verdict_group", "native"},
      {"denominator", "discard"}, {"topics", "1000"},
      {"complex_topics", "1000"}, {"simple_topics", "1000"},
      {"distractors", "false"},  {"allocation", "quota"},
      {"trusted_comment_rate", "0.5"}, {"noop_revisions", "1"},
      {"filler_sentences", "2"}, {"planted", ""}};
  return defaults;
}

std::string NormalizeKey(const char *key) {
  std::string k(key);
  for (char &ch : k) {
    if (ch == '-') ch = '_';
  }
  return k;
}

}  // namespace

extern "C" {

const char *lexsimp_version(void) { return "0.1.0"; }

const char *lexsimp_last_error(void) { return last_error.c_str(); }

const char *lexsimp_status_name(lexsimp_status status) {
  switch (status) {
    case LEXSIMP_OK: return "ok";
    case LEXSIMP_ERR_USAGE: return "usage error";
    case LEXSIMP_ERR_DATA: return "data error";
    case LEXSIMP_ERR_IO: return "i/o error";
    case LEXSIMP_ERR_MISSING_INPUT: return "missing input";
    case LEXSIMP_ERR_INTERNAL: return "internal error";
    case LEXSIMP_NOT_FOUND: return "not found";
  }
  return "unknown status";
}

void lexsimp_string_free(char *s) { std::free(s); }

lexsimp_status lexsimp_parse_method(const char *name, lexsimp_method *out) {
  return Guard([&] {
    Require(name, "name");
    Require(out, "out");
    *out = FromMethod(lexsimp::ParseMethod(name));
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_parse_corpus(const char *name, lexsimp_corpus *out) {
  return Guard([&] {
    Require(name, "name");
    Require(out, "out");
    *out = lexsimp::ParseCorpus(name) == lexsimp::Corpus::kComplex ? LEXSIMP_CORPUS_COMPLEX
                                                                   : LEXSIMP_CORPUS_SIMPLE;
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_config_new(lexsimp_config **out) {
  return Guard([&] {
    Require(out, "out");
    auto config = std::make_unique<lexsimp_config>();
    config->values = Defaults();
    *out = config.release();
    return LEXSIMP_OK;
  });
}

void lexsimp_config_free(lexsimp_config *config) { delete config; }

lexsimp_status lexsimp_config_set(lexsimp_config *config, const char *key, const char *value) {
  return Guard([&] {
    Require(config, "config");
    Require(key, "key");
    Require(value, "value");
    std::string k = NormalizeKey(key);
    auto it = Setters().find(k);
    if (it == Setters().end()) ThrowUsage("unknown configuration key '" + std::string(key) + "'");
    lexsimp_config updated = *config;
    it->second(updated, k, value);
    updated.values[k] = value;
    *config = std::move(updated);
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_config_get(const lexsimp_config *config, const char *key, char **value) {
  return Guard([&] {
    Require(config, "config");
    Require(key, "key");
    Require(value, "value");
    auto it = config->values.find(NormalizeKey(key));
    if (it == config->values.end()) {
      ThrowUsage("unknown configuration key '" + std::string(key) + "'");
    }
    *value = CopyString(it->second);
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_ingest(const lexsimp_config *config, lexsimp_corpus corpus,
                              const char *input, const char *output,
                              lexsimp_ingest_stats *stats) {
  return Guard([&] {
    Require(config, "config");
    Require(input, "input");
    lexsimp::IngestRequest request;
    request.input = input;
    request.corpus = ToCorpus(corpus);
    request.output = PathOr(output, lexsimp::SequencesPath(config->workdir, request.corpus));
    request.format = config->format;
    request.strip_markup = config->strip_markup;
    request.filter_textual = config->filter_textual;
    lexsimp::IngestStats s = lexsimp::RunIngest(request);
    if (stats != nullptr) {
      *stats = {s.dump.pages_seen, s.dump.pages_emitted, s.dump.pages_skipped, s.dump.revisions,
                s.revisions_kept};
    }
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_extract(const lexsimp_config *config, lexsimp_corpus corpus,
                               const char *sequences, const char *output,
                               lexsimp_extract_stats *stats) {
  return Guard([&] {
    Require(config, "config");
    lexsimp::ExtractRequest request;
    request.corpus = ToCorpus(corpus);
    request.sequences =
        PathOr(sequences, lexsimp::SequencesPath(config->workdir, request.corpus));
    request.output = PathOr(output, lexsimp::InstancesPath(config->workdir, request.corpus));
    request.config = config->extract;
    request.workers = config->workers;
    lexsimp::ExtractStats s = lexsimp::RunExtract(request);
    if (stats != nullptr) *stats = {s.articles, s.revisions, s.revisions_with_edits, s.instances};
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_count(const lexsimp_config *config, const char *output,
                             lexsimp_count_stats *stats) {
  return Guard([&] {
    Require(config, "config");
    lexsimp::CountRequest request;
    for (lexsimp::Corpus corpus : {lexsimp::Corpus::kComplex, lexsimp::Corpus::kSimple}) {
      request.inputs.push_back({corpus, lexsimp::SequencesPath(config->workdir, corpus),
                                lexsimp::InstancesPath(config->workdir, corpus)});
    }
    request.output = PathOr(output, lexsimp::StorePath(config->workdir));
    request.workers = config->workers;
    lexsimp::CountStats s = lexsimp::RunCount(request);
    if (stats != nullptr) *stats = {s.articles, s.vocabulary, s.instances};
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_rank(const lexsimp_config *config, lexsimp_method method,
                            const char *input, const char *output, lexsimp_rank_stats *stats) {
  return Guard([&] {
    Require(config, "config");
    lexsimp::Method m = ToMethod(method);
    lexsimp::RankRequest request = MakeRankRequest(*config, m, input);
    request.output = PathOr(output, lexsimp::RankedPath(config->workdir, m));
    lexsimp::RankStats s = lexsimp::RunRank(request);
    if (stats != nullptr) *stats = {s.candidates, s.pool};
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_synth(const lexsimp_config *config, lexsimp_synth_stats *stats) {
  return Guard([&] {
    Require(config, "config");
    lexsimp::SynthRequest request;
    request.spec = config->synth;
    if (!config->planted.empty()) {
      std::ifstream in = lexsimp::OpenInput(config->planted);
      request.spec.phrases = lexsimp::ReadPlantedPhrases(in);
    }
    request.complex_output = lexsimp::SequencesPath(config->workdir, lexsimp::Corpus::kComplex);
    request.simple_output = lexsimp::SequencesPath(config->workdir, lexsimp::Corpus::kSimple);
    request.truth_output = lexsimp::TruthPath(config->workdir);
    request.workers = config->workers;
    lexsimp::SynthStats s = lexsimp::RunSynth(request);
    if (stats != nullptr) *stats = {s.complex_articles, s.simple_articles, s.revisions};
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_eval_batch(const lexsimp_config *config, const char *const *ranked,
                                  size_t n_ranked, const char *output, uint64_t *pairs) {
  return Guard([&] {
    Require(config, "config");
    Require(output, "output");
    lexsimp::EvalBatchRequest request;
    request.ranked = PathList(ranked, n_ranked);
    request.k = config->model.top_k == 0 ? SIZE_MAX : config->model.top_k;
    request.dictionary = config->dictionary;
    request.dictionary_sample = config->dictionary_sample;
    request.rng_seed = config->rng_seed;
    request.output = output;
    uint64_t n = lexsimp::RunEvalBatch(request);
    if (pairs != nullptr) *pairs = n;
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_eval_report(const lexsimp_config *config, const char *const *ranked,
                                   size_t n_ranked, const char *manifest,
                                   const char *judgments, const char *text_output,
                                   const char *tsv_output, char **text) {
  return Guard([&] {
    Require(config, "config");
    Require(manifest, "manifest");
    Require(judgments, "judgments");
    lexsimp::EvalReportRequest request;
    request.ranked = PathList(ranked, n_ranked);
    request.manifest = manifest;
    request.judgments = judgments;
    request.judges = config->judges;
    request.verdict_group = config->verdict_group;
    request.dictionary = config->dictionary;
    request.k = config->model.top_k == 0 ? SIZE_MAX : config->model.top_k;
    request.denominator = config->denominator;
    request.text_output = PathOr(text_output, "");
    request.tsv_output = PathOr(tsv_output, "");
    lexsimp::EvalReport report = lexsimp::RunEvalReport(request);
    if (text != nullptr) {
      std::ostringstream out;
      lexsimp::WriteReportText(out, report);
      *text = CopyString(out.str());
    }
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_strip_markup(const char *wikitext, char **plain) {
  return Guard([&] {
    Require(wikitext, "wikitext");
    Require(plain, "plain");
    *plain = CopyString(lexsimp::StripMarkup(wikitext));
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_extract_pair(const char *old_sentence, const char *new_sentence,
                                    size_t max_tokens, char **source, char **target) {
  return Guard([&] {
    Require(old_sentence, "old_sentence");
    Require(new_sentence, "new_sentence");
    Require(source, "source");
    Require(target, "target");
    auto pair = lexsimp::ExtractEditPair(lexsimp::MakeSentence(lexsimp::Tokenize(old_sentence)),
                                         lexsimp::MakeSentence(lexsimp::Tokenize(new_sentence)),
                                         max_tokens);
    if (!pair) return LEXSIMP_NOT_FOUND;
    std::unique_ptr<char, decltype(&std::free)> s(CopyString(lexsimp::JoinTokens(pair->first)),
                                                  &std::free);
    *target = CopyString(lexsimp::JoinTokens(pair->second));
    *source = s.release();
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_store_new(lexsimp_store **out) {
  return Guard([&] {
    Require(out, "out");
    *out = new lexsimp_store();
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_store_load(const char *path, lexsimp_store **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    std::ifstream in = lexsimp::OpenInput(path);
    auto store = std::make_unique<lexsimp_store>();
    store->store = lexsimp::EditInstanceStore::Load(in);
    *out = store.release();
    return LEXSIMP_OK;
  });
}

void lexsimp_store_free(lexsimp_store *store) { delete store; }

lexsimp_status lexsimp_store_merge(lexsimp_store *into, const lexsimp_store *from) {
  return Guard([&] {
    Require(into, "into");
    Require(from, "from");
    into->store.Merge(from->store);
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_store_save(const lexsimp_store *store, const char *path) {
  return Guard([&] {
    Require(store, "store");
    Require(path, "path");
    std::ofstream out = lexsimp::OpenOutput(path);
    store->store.Save(out);
    out.flush();
    if (!out) throw Error(ErrorKind::kIo, "failed writing " + std::string(path));
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_store_count(const lexsimp_store *store, lexsimp_corpus corpus,
                                   const char *kind, const char *key, uint64_t *count) {
  return Guard([&] {
    Require(store, "store");
    Require(kind, "kind");
    Require(count, "count");
    const lexsimp::CorpusCounts &c = store->store.counts(ToCorpus(corpus));
    std::string k(kind);
    if (k == "articles") {
      *count = c.articles;
      return LEXSIMP_OK;
    }
    Require(key, "key");
    std::string name(key);
    if (k == "containing") {
      *count = lexsimp::CountOf(c.containing, name);
    } else if (k == "modifying") {
      *count = lexsimp::CountOf(c.modifying, name);
    } else if (k == "occurrences") {
      *count = lexsimp::CountOf(c.occurrences, name);
    } else if (k == "source_total") {
      *count = lexsimp::CountOf(c.source_total, name);
    } else if (k == "pair") {
      size_t sep = name.find(lexsimp::kPairSeparator);
      if (sep == std::string::npos) ThrowUsage("pair key must look like 'A ||| a'");
      auto it = c.pairs.find(name.substr(0, sep));
      *count = it == c.pairs.end()
                   ? 0
                   : lexsimp::CountOf(it->second, name.substr(sep + lexsimp::kPairSeparator.size()));
    } else {
      ThrowUsage("unknown count kind '" + k + "'");
    }
    return LEXSIMP_OK;
  });
}

int lexsimp_store_equal(const lexsimp_store *a, const lexsimp_store *b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->store == b->store ? 1 : 0;
}

lexsimp_status lexsimp_estimate_phrase(const lexsimp_store *store, double alpha,
                                       const char *phrase, lexsimp_estimate **out) {
  return Guard([&] {
    Require(store, "store");
    Require(phrase, "phrase");
    Require(out, "out");
    if (!(alpha >= 0.0 && alpha <= 1.0)) ThrowUsage("alpha must lie in [0, 1]");
    std::optional<lexsimp::PhraseEstimate> est =
        lexsimp::EstimatePhrase(store->store, lexsimp::PhraseKey(lexsimp::Tokenize(phrase)), alpha);
    if (!est) return LEXSIMP_NOT_FOUND;
    lexsimp::EstimateSimplifyConditional(&*est);
    *out = new lexsimp_estimate{std::move(*est)};
    return LEXSIMP_OK;
  });
}

void lexsimp_estimate_free(lexsimp_estimate *estimate) { delete estimate; }

lexsimp_status lexsimp_estimate_summary(const lexsimp_estimate *estimate,
                                        lexsimp_phrase_summary *out) {
  return Guard([&] {
    Require(estimate, "estimate");
    Require(out, "out");
    const lexsimp::PhraseEstimate &e = estimate->estimate;
    *out = {e.f_complex, e.f_simple,         e.p_fix,
            e.p_simplify, e.has_fix_evidence ? 1 : 0, e.simplify_defined() ? 1 : 0,
            e.targets.size()};
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_estimate_target(const lexsimp_estimate *estimate, size_t index,
                                       lexsimp_target_estimate *out) {
  return Guard([&] {
    Require(estimate, "estimate");
    Require(out, "out");
    const auto &targets = estimate->estimate.targets;
    if (index >= targets.size()) ThrowUsage("target index out of range");
    const lexsimp::TargetEstimate &t = targets[index];
    *out = {t.target.c_str(), t.p_any, t.p_fix_pair, t.p_simplify_raw, t.p_simplify};
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_candidates_rank(const lexsimp_config *config, lexsimp_method method,
                                       const char *input, lexsimp_candidates **out) {
  return Guard([&] {
    Require(config, "config");
    Require(out, "out");
    lexsimp::RankRequest request = MakeRankRequest(*config, ToMethod(method), input);
    auto result = std::make_unique<lexsimp_candidates>();
    result->items = lexsimp::RankCandidates(request);
    *out = result.release();
    return LEXSIMP_OK;
  });
}

lexsimp_status lexsimp_candidates_load(const char *path, lexsimp_candidates **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    std::ifstream in = lexsimp::OpenInput(path);
    auto result = std::make_unique<lexsimp_candidates>();
    result->items = lexsimp::ReadCandidates(in);
    *out = result.release();
    return LEXSIMP_OK;
  });
}

void lexsimp_candidates_free(lexsimp_candidates *candidates) { delete candidates; }

size_t lexsimp_candidates_size(const lexsimp_candidates *candidates) {
  return candidates == nullptr ? 0 : candidates->items.size();
}

lexsimp_status lexsimp_candidates_get(const lexsimp_candidates *candidates, size_t index,
                                      lexsimp_candidate *out) {
  return Guard([&] {
    Require(candidates, "candidates");
    Require(out, "out");
    if (index >= candidates->items.size()) ThrowUsage("candidate index out of range");
    const lexsimp::SimplificationCandidate &c = candidates->items[index];
    *out = {c.source.c_str(), c.target.c_str(), c.score, c.detail, FromMethod(c.method)};
    return LEXSIMP_OK;
  });
}

}  // extern "C"
