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

#ifndef LEXSIMP_CORE_INSTANCE_STORE_HPP_
#define LEXSIMP_CORE_INSTANCE_STORE_HPP_

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

// The set of source phrases that were ever edited, in either corpus. Only
// these phrases get containment counts.
class PhraseVocabulary {
 public:
  void Add(const Phrase &phrase);
  void AddKey(const std::string &key);

  bool Contains(const std::string &key) const { return keys_.count(key) > 0; }
  size_t size() const { return keys_.size(); }
  size_t max_tokens() const { return max_tokens_; }

  // Calls `fn(key)` for every occurrence of a vocabulary phrase in the
  // lowercased token stream.
  template <typename Fn>
  void ForEachOccurrence(const std::vector<std::string> &lower_tokens, Fn fn) const {
    std::string key;
    for (size_t i = 0; i < lower_tokens.size(); ++i) {
      key.clear();
      for (size_t n = 1; n <= max_tokens_ && i + n <= lower_tokens.size(); ++n) {
        if (n > 1) key.push_back(' ');
        key += lower_tokens[i + n - 1];
        if (keys_.count(key) > 0) fn(key);
      }
    }
  }

 private:
  std::unordered_set<std::string> keys_;
  size_t max_tokens_ = 0;
};

// Counts for one corpus. Phrase keys are lowercased, space-joined tokens.
struct CorpusCounts {
  uint64_t articles = 0;
  std::map<std::string, uint64_t> containing;   // topics where A appears
  std::map<std::string, uint64_t> modifying;    // topics where A is edited
  std::map<std::string, uint64_t> occurrences;  // A's occurrences over versions
  std::map<std::string, uint64_t> source_total; // instances A -> *
  std::map<std::string, std::map<std::string, uint64_t>> pairs;  // A -> a -> n

  bool operator==(const CorpusCounts &) const = default;
};

// Sufficient statistics of the edit model for both corpora. Accumulation is
// per article; stores built from disjoint article sets merge by pointwise
// addition (associative and commutative). Merging stores that share articles
// double-counts them and cannot be detected.
class EditInstanceStore {
 public:
  const CorpusCounts &counts(Corpus corpus) const {
    return corpora_[static_cast<size_t>(corpus)];
  }
  CorpusCounts &mutable_counts(Corpus corpus) {
    return corpora_[static_cast<size_t>(corpus)];
  }

  // Adds one article. `instances` must have been extracted from `sequence`;
  // containment is counted for vocabulary phrases over every version.
  void Accumulate(const VersionSequence &sequence,
                  std::span<const LexicalEditInstance> instances,
                  const PhraseVocabulary &vocabulary);

  void Merge(const EditInstanceStore &other);

  // Checks the count invariants; throws a kData error on violation.
  void Validate() const;

  // Sorted TSV snapshot: corpus, kind, key, count.
  void Save(std::ostream &out) const;
  static EditInstanceStore Load(std::istream &in);

  bool operator==(const EditInstanceStore &) const = default;

 private:
  std::array<CorpusCounts, 2> corpora_;
};

EditInstanceStore Merge(EditInstanceStore a, const EditInstanceStore &b);

uint64_t CountOf(const std::map<std::string, uint64_t> &map, const std::string &key);

// Separator between A and a in pair keys of the snapshot. Tokens never
// contain it because the tokenizer splits punctuation runs into characters.
inline constexpr std::string_view kPairSeparator = " ||| ";

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_INSTANCE_STORE_HPP_
