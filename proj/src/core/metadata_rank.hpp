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

#ifndef LEXSIMP_CORE_METADATA_RANK_HPP_
#define LEXSIMP_CORE_METADATA_RANK_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

// Decides whether a revision comment marks the revision as trusted. Each
// pattern is a case-insensitive glob ('*' and '?') matched against every
// whitespace-delimited comment word; a pattern without '*' matches as a
// substring, so "simpl" and "*simpl*" are equivalent.
class TrustedCommentMatcher {
 public:
  TrustedCommentMatcher();  // the default seed set {*simpl*}
  explicit TrustedCommentMatcher(std::vector<std::string> patterns);

  bool Matches(const std::optional<std::string> &comment) const;
  const std::vector<std::string> &patterns() const { return patterns_; }

 private:
  std::vector<std::string> patterns_;  // lowercased globs
};

bool GlobMatch(std::string_view pattern, std::string_view text);

// Instances of the revisions whose comment matches the matcher.
std::vector<LexicalEditInstance> SelectTrusted(std::span<const RevisionEdits> revisions,
                                               const TrustedCommentMatcher &matcher);

// Pointwise mutual information of each distinct (A, a) over the instance
// multiset: log(p(A,a) / (p(A,.) p(.,a))). Sorted by score, then pair count
// (descending), then A and a. Score ties are decided on exact count ratios.
std::vector<SimplificationCandidate> PmiRank(std::span<const LexicalEditInstance> trusted);

// Distinct pairs by instance count, descending; ties by A then a.
std::vector<SimplificationCandidate> BaselineFrequent(
    std::span<const LexicalEditInstance> instances, size_t k);

enum class RandomSampling {
  kDistinct,  // every distinct pair equally likely
  kWeighted,  // pairs drawn in proportion to their instance count
};

// k pairs sampled without replacement; the whole population (shuffled) when
// k exceeds it. Deterministic for a given seed.
std::vector<SimplificationCandidate> BaselineRandom(
    std::span<const LexicalEditInstance> instances, size_t k, uint64_t seed,
    RandomSampling sampling = RandomSampling::kDistinct);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_METADATA_RANK_HPP_
