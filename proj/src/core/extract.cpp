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

#include "core/extract.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace lexsimp {
namespace {

using TermWeights = std::unordered_map<std::string_view, double>;

class IdfTable {
 public:
  IdfTable(std::span<const Sentence> a, std::span<const Sentence> b) {
    size_t n = a.size() + b.size();
    std::unordered_map<std::string_view, size_t> df;
    auto add = [&df](const Sentence &s) {
      std::unordered_set<std::string_view> seen(s.lower.begin(), s.lower.end());
      for (std::string_view term : seen) ++df[term];
    };
    for (const Sentence &s : a) add(s);
    for (const Sentence &s : b) add(s);
    for (const auto &[term, count] : df) {
      // Smoothed so that terms present in every sentence keep a weight.
      idf_[term] = std::log((1.0 + static_cast<double>(n)) /
                            (1.0 + static_cast<double>(count))) +
                   1.0;
    }
  }

  TermWeights Vector(const Sentence &s) const {
    TermWeights weights;
    for (std::string_view term : s.lower) weights[term] += 1.0;
    for (auto &[term, weight] : weights) weight *= idf_.at(term);
    return weights;
  }

 private:
  std::unordered_map<std::string_view, double> idf_;
};

double Norm(const TermWeights &v) {
  double sum = 0.0;
  for (const auto &[term, w] : v) sum += w * w;
  return std::sqrt(sum);
}

double Cosine(const TermWeights &a, double norm_a, const TermWeights &b,
              double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  const TermWeights &small = a.size() <= b.size() ? a : b;
  const TermWeights &large = a.size() <= b.size() ? b : a;
  double dot = 0.0;
  for (const auto &[term, w] : small) {
    auto it = large.find(term);
    if (it != large.end()) dot += w * it->second;
  }
  double cos = dot / (norm_a * norm_b);
  // Equal term vectors: report exactly 1 regardless of rounding.
  if (cos > 1.0 - 1e-12) cos = 1.0;
  return cos;
}

std::string JoinLower(const Sentence &s) { return JoinTokens(s.lower); }

}  // namespace

double TfIdfCosine(std::span<const Sentence> old_sentences,
                   std::span<const Sentence> new_sentences, size_t old_index,
                   size_t new_index) {
  IdfTable idf(old_sentences, new_sentences);
  TermWeights a = idf.Vector(old_sentences[old_index]);
  TermWeights b = idf.Vector(new_sentences[new_index]);
  return Cosine(a, Norm(a), b, Norm(b));
}

std::vector<SentenceAlignment> AlignSentences(std::span<const Sentence> old_sentences,
                                              std::span<const Sentence> new_sentences,
                                              const ExtractConfig &config) {
  std::vector<SentenceAlignment> result;
  std::vector<bool> old_used(old_sentences.size(), false);
  std::vector<bool> new_used(new_sentences.size(), false);

  // Exact duplicates first.
  std::unordered_map<std::string, std::vector<size_t>> by_text;
  for (size_t j = new_sentences.size(); j-- > 0;) {
    by_text[JoinLower(new_sentences[j])].push_back(j);  // reversed: pop smallest
  }
  for (size_t i = 0; i < old_sentences.size(); ++i) {
    auto it = by_text.find(JoinLower(old_sentences[i]));
    if (it == by_text.end() || it->second.empty()) continue;
    size_t j = it->second.back();
    it->second.pop_back();
    old_used[i] = true;
    new_used[j] = true;
    if (1.0 >= config.tau_align) result.push_back({i, j, 1.0});
  }

  std::vector<size_t> old_rest;
  std::vector<size_t> new_rest;
  for (size_t i = 0; i < old_sentences.size(); ++i) {
    if (!old_used[i]) old_rest.push_back(i);
  }
  for (size_t j = 0; j < new_sentences.size(); ++j) {
    if (!new_used[j]) new_rest.push_back(j);
  }
  if (!old_rest.empty() && !new_rest.empty()) {
    IdfTable idf(old_sentences, new_sentences);
    std::vector<TermWeights> old_vec;
    std::vector<double> old_norm;
    for (size_t i : old_rest) {
      old_vec.push_back(idf.Vector(old_sentences[i]));
      old_norm.push_back(Norm(old_vec.back()));
    }
    std::vector<TermWeights> new_vec;
    std::vector<double> new_norm;
    for (size_t j : new_rest) {
      new_vec.push_back(idf.Vector(new_sentences[j]));
      new_norm.push_back(Norm(new_vec.back()));
    }

    std::vector<SentenceAlignment> candidates;
    for (size_t a = 0; a < old_rest.size(); ++a) {
      for (size_t b = 0; b < new_rest.size(); ++b) {
        double sim = Cosine(old_vec[a], old_norm[a], new_vec[b], new_norm[b]);
        if (sim >= config.tau_align) candidates.push_back({old_rest[a], new_rest[b], sim});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const SentenceAlignment &x, const SentenceAlignment &y) {
                if (x.similarity != y.similarity) return x.similarity > y.similarity;
                if (x.old_index != y.old_index) return x.old_index < y.old_index;
                return x.new_index < y.new_index;
              });
    for (const SentenceAlignment &c : candidates) {
      if (old_used[c.old_index] || new_used[c.new_index]) continue;
      old_used[c.old_index] = true;
      new_used[c.new_index] = true;
      result.push_back(c);
    }
  }

  std::sort(result.begin(), result.end(),
            [](const SentenceAlignment &x, const SentenceAlignment &y) {
              return x.old_index < y.old_index;
            });
  return result;
}

std::optional<std::pair<Phrase, Phrase>> ExtractEditPair(const Sentence &old_sentence,
                                                         const Sentence &new_sentence,
                                                         size_t max_tokens) {
  const auto &a = old_sentence.lower;
  const auto &b = new_sentence.lower;
  size_t limit = std::min(a.size(), b.size());
  size_t prefix = 0;
  while (prefix < limit && a[prefix] == b[prefix]) ++prefix;
  size_t suffix = 0;
  while (suffix < limit - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  size_t old_len = a.size() - prefix - suffix;
  size_t new_len = b.size() - prefix - suffix;
  if (old_len == 0 || new_len == 0) return std::nullopt;
  if (old_len > max_tokens || new_len > max_tokens) return std::nullopt;

  auto old_begin = old_sentence.tokens.begin() + static_cast<std::ptrdiff_t>(prefix);
  auto new_begin = new_sentence.tokens.begin() + static_cast<std::ptrdiff_t>(prefix);
  Phrase source(old_begin, old_begin + static_cast<std::ptrdiff_t>(old_len));
  Phrase target(new_begin, new_begin + static_cast<std::ptrdiff_t>(new_len));
  return std::make_pair(std::move(source), std::move(target));
}

std::optional<LexicalEditInstance> ExtractEditInstance(const Sentence &old_sentence,
                                                       const Sentence &new_sentence,
                                                       const ExtractConfig &config) {
  auto pair = ExtractEditPair(old_sentence, new_sentence, config.max_phrase_tokens);
  if (!pair) return std::nullopt;
  LexicalEditInstance instance;
  instance.source = std::move(pair->first);
  instance.target = std::move(pair->second);
  return instance;
}

std::vector<RevisionEdits> ExtractFromSequence(const VersionSequence &sequence,
                                               const ExtractConfig &config) {
  std::vector<RevisionEdits> groups;
  if (sequence.revisions.size() < 2) return groups;

  std::vector<Sentence> previous = SplitSentences(sequence.revisions[0].text);
  for (size_t r = 1; r < sequence.revisions.size(); ++r) {
    const Revision &rev = sequence.revisions[r];
    std::vector<Sentence> current = SplitSentences(rev.text);
    if (rev.text != sequence.revisions[r - 1].text) {
      RevisionEdits group;
      group.article_id = sequence.article_id;
      group.revision_index = rev.revision_index;
      group.comment = rev.comment;
      for (const SentenceAlignment &al : AlignSentences(previous, current, config)) {
        if (al.similarity >= config.tau_identical) continue;
        auto instance = ExtractEditInstance(previous[al.old_index],
                                            current[al.new_index], config);
        if (!instance) continue;
        instance->article_id = sequence.article_id;
        instance->revision_index = rev.revision_index;
        instance->corpus = sequence.corpus;
        group.instances.push_back(std::move(*instance));
      }
      if (!group.instances.empty()) groups.push_back(std::move(group));
    }
    previous = std::move(current);
  }
  return groups;
}

}  // namespace lexsimp
