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

#ifndef LEXSIMP_CORE_EXTRACT_HPP_
#define LEXSIMP_CORE_EXTRACT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/common.hpp"
#include "core/tokenize.hpp"

namespace lexsimp {

struct ExtractConfig {
  // Aligned pairs below tau_align are treated as unaligned; pairs at or above
  // tau_identical carry no edit.
  double tau_align = 0.5;
  double tau_identical = 1.0;
  size_t max_phrase_tokens = 5;
};

struct SentenceAlignment {
  size_t old_index = 0;
  size_t new_index = 0;
  double similarity = 0.0;
};

// Greedy best-first one-to-one alignment of two versions' sentences by tf-idf
// cosine similarity. Document frequencies are taken over the sentences of both
// versions. Sentences with identical (lowercased) tokens are paired first with
// similarity exactly 1.0. Only pairs with similarity >= tau_align are
// returned, ordered by old_index.
std::vector<SentenceAlignment> AlignSentences(std::span<const Sentence> old_sentences,
                                              std::span<const Sentence> new_sentences,
                                              const ExtractConfig &config = {});

// tf-idf cosine between two sentences of a version pair; exposed for tests.
double TfIdfCosine(std::span<const Sentence> old_sentences,
                   std::span<const Sentence> new_sentences, size_t old_index,
                   size_t new_index);

// Longest differing segment of two token sequences: strips the longest common
// prefix and then the longest common suffix of what remains (comparing
// lowercased tokens). Returns the two middle spans when both hold between 1
// and max_tokens tokens. The source keeps the old sentence's case and the
// target the new sentence's case.
std::optional<std::pair<Phrase, Phrase>> ExtractEditPair(const Sentence &old_sentence,
                                                         const Sentence &new_sentence,
                                                         size_t max_tokens = 5);

std::optional<LexicalEditInstance> ExtractEditInstance(const Sentence &old_sentence,
                                                       const Sentence &new_sentence,
                                                       const ExtractConfig &config = {});

// Runs alignment and extraction over every adjacent revision pair. Only
// revisions that yield at least one instance appear in the result.
std::vector<RevisionEdits> ExtractFromSequence(const VersionSequence &sequence,
                                               const ExtractConfig &config = {});

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_EXTRACT_HPP_
