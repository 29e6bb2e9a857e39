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

#ifndef LEXSIMP_CORE_PIPELINE_HPP_
#define LEXSIMP_CORE_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/dump_reader.hpp"
#include "core/edit_model.hpp"
#include "core/eval.hpp"
#include "core/extract.hpp"
#include "core/metadata_rank.hpp"
#include "core/synth.hpp"

namespace lexsimp {

// Artifact names inside a working directory.
std::string SequencesPath(const std::string &workdir, Corpus corpus);
std::string InstancesPath(const std::string &workdir, Corpus corpus);
std::string StorePath(const std::string &workdir);
std::string RankedPath(const std::string &workdir, Method method);
std::string TruthPath(const std::string &workdir);

struct IngestRequest {
  std::string input;
  std::string output;  // fixture JSONL
  Corpus corpus = Corpus::kSimple;
  DumpFormat format = DumpFormat::kAuto;
  bool strip_markup = true;
  bool filter_textual = true;  // drop revisions without a textual change
};

struct IngestStats {
  DumpStats dump;
  uint64_t revisions_kept = 0;
};

IngestStats RunIngest(const IngestRequest &request);

struct ExtractRequest {
  std::string sequences;  // fixture JSONL from ingest or synth
  std::string output;     // instance JSONL
  Corpus corpus = Corpus::kSimple;
  ExtractConfig config;
  size_t workers = 1;
};

struct ExtractStats {
  uint64_t articles = 0;
  uint64_t revisions = 0;
  uint64_t revisions_with_edits = 0;
  uint64_t instances = 0;
};

ExtractStats RunExtract(const ExtractRequest &request);

struct CorpusInputs {
  Corpus corpus = Corpus::kSimple;
  std::string sequences;
  std::string instances;
};

struct CountRequest {
  std::vector<CorpusInputs> inputs;
  std::string output;  // store snapshot TSV
  size_t workers = 1;
};

struct CountStats {
  uint64_t articles = 0;
  uint64_t vocabulary = 0;
  uint64_t instances = 0;
};

// Two passes: the source-phrase vocabulary from every instance file, then
// containment and pair counts per article. Articles are split across
// `workers` private stores that are merged at the end, so the snapshot does
// not depend on the worker count.
CountStats RunCount(const CountRequest &request);

struct RankRequest {
  Method method = Method::kEditModel;
  std::string store;      // edit model input
  std::string instances;  // simple-corpus instances for the other methods
  std::string output;
  ModelConfig model;
  std::vector<std::string> seed_patterns = {"*simpl*"};
  uint64_t rng_seed = 0;
  RandomSampling sampling = RandomSampling::kDistinct;
};

struct RankStats {
  uint64_t candidates = 0;  // rows written
  uint64_t pool = 0;        // eligible phrases, trusted instances or instances
};

RankStats RunRank(const RankRequest &request);

std::vector<SimplificationCandidate> RankCandidates(const RankRequest &request,
                                                    RankStats *stats = nullptr);

struct SynthRequest {
  GeneratorSpec spec;
  std::string complex_output;
  std::string simple_output;
  std::string truth_output;
  size_t workers = 1;
};

struct SynthStats {
  uint64_t complex_articles = 0;
  uint64_t simple_articles = 0;
  uint64_t revisions = 0;
};

SynthStats RunSynth(const SynthRequest &request);

struct EvalBatchRequest {
  std::vector<std::string> ranked;  // candidate TSVs
  size_t k = 100;                   // top K of each list enters the batch
  std::string dictionary;           // optional
  size_t dictionary_sample = 0;
  uint64_t rng_seed = 0;
  std::string output;               // manifest TSV
};

uint64_t RunEvalBatch(const EvalBatchRequest &request);

struct EvalReportRequest {
  std::vector<std::string> ranked;
  std::string manifest;
  std::string judgments;
  std::string judges;      // optional judge_id<TAB>group file
  std::string verdict_group = "native";  // used when present in `judges`
  std::string dictionary;  // optional
  size_t k = 100;
  PrecisionDenominator denominator = PrecisionDenominator::kDiscardAdjusted;
  std::string text_output;  // optional
  std::string tsv_output;   // optional
};

EvalReport BuildEvalReport(const EvalReportRequest &request);
EvalReport RunEvalReport(const EvalReportRequest &request);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_PIPELINE_HPP_
