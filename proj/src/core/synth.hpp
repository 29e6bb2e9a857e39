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

#ifndef LEXSIMP_CORE_SYNTH_HPP_
#define LEXSIMP_CORE_SYNTH_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

using WeightedTargets = std::vector<std::pair<std::string, double>>;

struct PlantedPhrase {
  std::string phrase;
  double p_fix = 0.0;       // fix rate in the simple corpus
  double p_simplify = 0.0;  // simplify rate in the simple corpus
  WeightedTargets fix_targets;
  WeightedTargets simplify_targets;
};

// How per-topic operations are drawn.
enum class Allocation {
  // Exactly round(rate * topics) topics receive each operation, in shuffled
  // order; targets are split the same way. Empirical rates then match the
  // planted ones up to rounding.
  kQuota,
  // Every topic draws its operation independently.
  kBernoulli,
};

struct GeneratorSpec {
  std::vector<PlantedPhrase> phrases;
  uint64_t complex_topics = 1000;
  uint64_t simple_topics = 1000;
  // The complex corpus applies fixes at p_fix / alpha, so that
  // p_fix = alpha * (complex fix rate).
  double alpha = 1.0;
  uint64_t seed = 0;
  double trusted_comment_rate = 0.5;  // simplify revisions with a *simpl* comment
  size_t filler_sentences = 2;
  size_t noop_revisions = 1;          // unchanged revisions per topic
  bool distractors = false;           // unrelated sentence edits and insertions
  Allocation allocation = Allocation::kQuota;

  // Throws kUsage on out-of-range rates, distributions that do not sum to 1,
  // or targets that share their first or last token with the phrase.
  void Validate() const;

  // Ten phrases with simplify rates 0, 0.1, 0.3 and 0.6.
  static GeneratorSpec Default();
};

struct GeneratedCorpora {
  std::vector<VersionSequence> complex;
  std::vector<VersionSequence> simple;
};

// Deterministic for a given GeneratorSpec. Topics are generated independently from
// per-topic seeds, so `workers` only changes the wall time.
GeneratedCorpora Generate(const GeneratorSpec &spec, size_t workers = 1);

// Ground-truth table, one row per planted probability:
//   A  fix  -  p
//   A  simplify  -  p
//   A  fix_target  a  p
//   A  simplify_target  a  p
void WriteGroundTruth(std::ostream &out, const GeneratorSpec &spec);

// Reads planted phrases in the ground-truth format. Phrase order follows the
// first appearance of each A.
std::vector<PlantedPhrase> ReadPlantedPhrases(std::istream &in);

// Most probable simplify target (first listed on ties); empty when none.
std::string ModalSimplifyTarget(const PlantedPhrase &phrase);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_SYNTH_HPP_
