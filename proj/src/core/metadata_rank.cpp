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

#include "core/metadata_rank.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <random>
#include <utility>

namespace lexsimp {
namespace {

using PairKey = std::pair<std::string, std::string>;

std::map<PairKey, uint64_t> CountPairs(std::span<const LexicalEditInstance> instances) {
  std::map<PairKey, uint64_t> counts;
  for (const LexicalEditInstance &inst : instances) {
    ++counts[{PhraseKey(inst.source), PhraseKey(inst.target)}];
  }
  return counts;
}

// Uniform integer in [0, n) from a 64-bit engine, without modulo bias.
uint64_t UniformBelow(std::mt19937_64 &engine, uint64_t n) {
  uint64_t threshold = (0 - n) % n;
  while (true) {
    uint64_t x = engine();
    if (x >= threshold) return x % n;
  }
}

SimplificationCandidate MakeCandidate(const PairKey &key, uint64_t count, Method method) {
  SimplificationCandidate c;
  c.source = key.first;
  c.target = key.second;
  c.score = static_cast<double>(count);
  c.detail = static_cast<double>(count);
  c.method = method;
  return c;
}

}  // namespace

TrustedCommentMatcher::TrustedCommentMatcher() : TrustedCommentMatcher({"*simpl*"}) {}

TrustedCommentMatcher::TrustedCommentMatcher(std::vector<std::string> patterns) {
  for (std::string &p : patterns) {
    std::string glob = AsciiLower(p);
    if (glob.empty()) continue;
    if (glob.find('*') == std::string::npos) glob = "*" + glob + "*";
    patterns_.push_back(std::move(glob));
  }
  if (patterns_.empty()) ThrowUsage("trusted comment matcher needs at least one pattern");
}

bool GlobMatch(std::string_view pattern, std::string_view text) {
  // Iterative matcher with single-star backtracking.
  size_t p = 0, t = 0;
  size_t star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

bool TrustedCommentMatcher::Matches(const std::optional<std::string> &comment) const {
  if (!comment) return false;
  std::string lower = AsciiLower(*comment);
  size_t pos = 0;
  while (pos < lower.size()) {
    while (pos < lower.size() && std::isspace(static_cast<unsigned char>(lower[pos]))) ++pos;
    size_t end = pos;
    while (end < lower.size() && !std::isspace(static_cast<unsigned char>(lower[end]))) ++end;
    if (end > pos) {
      std::string_view word(lower.data() + pos, end - pos);
      for (const std::string &glob : patterns_) {
        if (GlobMatch(glob, word)) return true;
      }
    }
    pos = end;
  }
  return false;
}

std::vector<LexicalEditInstance> SelectTrusted(std::span<const RevisionEdits> revisions,
                                               const TrustedCommentMatcher &matcher) {
  std::vector<LexicalEditInstance> trusted;
  for (const RevisionEdits &rev : revisions) {
    if (!matcher.Matches(rev.comment)) continue;
    trusted.insert(trusted.end(), rev.instances.begin(), rev.instances.end());
  }
  return trusted;
}

std::vector<SimplificationCandidate> PmiRank(std::span<const LexicalEditInstance> trusted) {
  std::map<PairKey, uint64_t> joint = CountPairs(trusted);
  std::map<std::string, uint64_t> by_source;
  std::map<std::string, uint64_t> by_target;
  for (const auto &[key, n] : joint) {
    by_source[key.first] += n;
    by_target[key.second] += n;
  }
  const double total = static_cast<double>(trusted.size());

  struct Scored {
    SimplificationCandidate candidate;
    uint64_t joint, source, target;
  };
  std::vector<Scored> scored;
  scored.reserve(joint.size());
  for (const auto &[key, n] : joint) {
    uint64_t ns = by_source[key.first];
    uint64_t nt = by_target[key.second];
    double p_joint = static_cast<double>(n) / total;
    double p_source = static_cast<double>(ns) / total;
    double p_target = static_cast<double>(nt) / total;
    SimplificationCandidate c = MakeCandidate(key, n, Method::kSimpl);
    c.score = std::log(p_joint / (p_source * p_target));
    scored.push_back({std::move(c), n, ns, nt});
  }
  // PMI order equals the order of n / (n_source * n_target); compare that
  // ratio exactly so mathematically equal scores tie.
  std::sort(scored.begin(), scored.end(), [](const Scored &x, const Scored &y) {
    unsigned __int128 lhs = static_cast<unsigned __int128>(x.joint) * y.source * y.target;
    unsigned __int128 rhs = static_cast<unsigned __int128>(y.joint) * x.source * x.target;
    if (lhs != rhs) return lhs > rhs;
    if (x.joint != y.joint) return x.joint > y.joint;
    if (x.candidate.source != y.candidate.source) return x.candidate.source < y.candidate.source;
    return x.candidate.target < y.candidate.target;
  });
  std::vector<SimplificationCandidate> out;
  out.reserve(scored.size());
  for (Scored &s : scored) out.push_back(std::move(s.candidate));
  return out;
}

std::vector<SimplificationCandidate> BaselineFrequent(
    std::span<const LexicalEditInstance> instances, size_t k) {
  std::vector<std::pair<PairKey, uint64_t>> counts;
  for (auto &entry : CountPairs(instances)) counts.emplace_back(entry);
  std::stable_sort(counts.begin(), counts.end(),
                   [](const auto &x, const auto &y) { return x.second > y.second; });
  if (counts.size() > k) counts.resize(k);
  std::vector<SimplificationCandidate> out;
  for (const auto &[key, n] : counts) out.push_back(MakeCandidate(key, n, Method::kFrequent));
  return out;
}

std::vector<SimplificationCandidate> BaselineRandom(
    std::span<const LexicalEditInstance> instances, size_t k, uint64_t seed,
    RandomSampling sampling) {
  std::vector<std::pair<PairKey, uint64_t>> population;
  for (auto &entry : CountPairs(instances)) population.emplace_back(entry);
  std::mt19937_64 engine(seed);
  size_t n = population.size();
  size_t take = std::min(k, n);

  if (sampling == RandomSampling::kDistinct) {
    // Partial Fisher-Yates over the canonical (sorted) population.
    for (size_t i = 0; i + 1 < n && i < take; ++i) {
      size_t j = i + static_cast<size_t>(UniformBelow(engine, n - i));
      std::swap(population[i], population[j]);
    }
  } else {
    uint64_t remaining = 0;
    for (const auto &p : population) remaining += p.second;
    for (size_t i = 0; i < take; ++i) {
      uint64_t r = UniformBelow(engine, remaining);
      size_t j = i;
      while (r >= population[j].second) {
        r -= population[j].second;
        ++j;
      }
      remaining -= population[j].second;
      std::swap(population[i], population[j]);
    }
  }
  population.resize(take);
  std::vector<SimplificationCandidate> out;
  for (const auto &[key, count] : population) {
    out.push_back(MakeCandidate(key, count, Method::kRandom));
  }
  return out;
}

}  // namespace lexsimp
