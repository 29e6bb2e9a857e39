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

#ifndef LEXSIMP_CORE_EDIT_MODEL_HPP_
#define LEXSIMP_CORE_EDIT_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/instance_store.hpp"

namespace lexsimp {

// How freq(A) is measured for the eligibility threshold.
enum class PhraseFreqMode {
  kTopics,       // number of articles containing A
  kOccurrences,  // occurrences of A summed over distinct versions
};

struct ModelConfig {
  double alpha = 1.0;              // fix-rate damping, 0 <= alpha <= 1
  uint64_t min_pair_freq = 2;      // freq(A -> *) >= this, in both corpora
  uint64_t min_phrase_freq = 101;  // freq(A) >= this, in both corpora
  size_t top_k = 100;              // 0 keeps every eligible phrase
  PhraseFreqMode phrase_freq = PhraseFreqMode::kTopics;

  void Validate() const;
};

using Distribution = std::map<std::string, double>;

// Fraction of the corpus's articles containing `phrase` in which it is
// edited. nullopt when the phrase never occurs in that corpus.
std::optional<double> TopicFraction(const EditInstanceStore &store, Corpus corpus,
                                    const std::string &phrase);

// max(0, f_simple - alpha * f_complex)
double EstimateSimplifyProb(double f_complex, double f_simple, double alpha);

// Share of complex-corpus instances rewriting `phrase` into each target.
// nullopt when the phrase has no complex-corpus edit (no fix evidence).
std::optional<Distribution> EstimateFixConditional(const EditInstanceStore &store,
                                                   const std::string &phrase);

// Same over the simple corpus, where fixes and simplifications both occur.
std::optional<Distribution> EstimateAnyConditional(const EditInstanceStore &store,
                                                   const std::string &phrase);

// Solves the mixture for the simplify conditional of one target:
//   (p_any - p_fix * p_fix_pair) / p_simplify.
// Requires p_simplify > 0.
double SimplifyConditionalRaw(double p_any, double p_fix, double p_fix_pair,
                              double p_simplify);

struct TargetEstimate {
  std::string target;
  double p_any = 0.0;           // P(a | A), simple corpus
  double p_fix_pair = 0.0;      // P(a | A, fix), complex corpus; 0 without evidence
  double p_simplify_raw = 0.0;  // unclamped P(a | A, simplify)
  double p_simplify = 0.0;      // clamped to [0, 1]
};

struct PhraseEstimate {
  std::string phrase;
  double f_complex = 0.0;
  double f_simple = 0.0;
  double p_fix = 0.0;       // alpha * f_complex
  double p_simplify = 0.0;  // max(0, f_simple - alpha * f_complex)
  bool has_fix_evidence = false;
  bool has_any_evidence = false;
  // Targets observed for the phrase in either corpus, sorted by target.
  // The simplify fields are only meaningful when simplify_defined().
  std::vector<TargetEstimate> targets;

  bool simplify_defined() const { return p_simplify > 0.0; }
};

// All estimates for one phrase. nullopt unless the phrase occurs in both
// corpora.
std::optional<PhraseEstimate> EstimatePhrase(const EditInstanceStore &store,
                                             const std::string &phrase, double alpha);

// Fills p_simplify_raw and p_simplify for every target. Returns false, leaving
// the targets untouched, when p_simplify is 0 (the conditional is undefined).
bool EstimateSimplifyConditional(PhraseEstimate *estimate);

// Estimates for every phrase that occurs in both corpora, sorted by phrase.
std::vector<PhraseEstimate> EstimateAll(const EditInstanceStore &store, double alpha);

// Ranks eligible phrases by p_simplify (descending, then phrase) and emits,
// for each, the target with the highest clamped simplify conditional (ties:
// higher unclamped value, then higher P(a|A), then target). Phrases with
// p_simplify == 0 are excluded.
std::vector<SimplificationCandidate> RankEditModel(const EditInstanceStore &store,
                                                   const ModelConfig &config);

// Number of phrases passing the eligibility thresholds with a defined
// simplify conditional (the ranking before top_k truncation).
size_t CountEligiblePhrases(const EditInstanceStore &store, const ModelConfig &config);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_EDIT_MODEL_HPP_
