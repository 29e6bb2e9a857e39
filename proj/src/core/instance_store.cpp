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

#include "core/instance_store.hpp"

#include <algorithm>
#include <set>

#include "core/tokenize.hpp"

namespace lexsimp {

void PhraseVocabulary::Add(const Phrase &phrase) {
  if (phrase.empty()) return;
  keys_.insert(PhraseKey(phrase));
  max_tokens_ = std::max(max_tokens_, phrase.size());
}

void PhraseVocabulary::AddKey(const std::string &key) {
  Phrase tokens = SplitOnSpaces(key);
  if (tokens.empty()) return;
  keys_.insert(JoinTokens(tokens));
  max_tokens_ = std::max(max_tokens_, tokens.size());
}

uint64_t CountOf(const std::map<std::string, uint64_t> &map, const std::string &key) {
  auto it = map.find(key);
  return it == map.end() ? 0 : it->second;
}

void EditInstanceStore::Accumulate(const VersionSequence &sequence,
                                   std::span<const LexicalEditInstance> instances,
                                   const PhraseVocabulary &vocabulary) {
  CorpusCounts &c = mutable_counts(sequence.corpus);
  ++c.articles;

  std::set<std::string> contained;
  const std::string *previous = nullptr;
  for (const Revision &rev : sequence.revisions) {
    if (previous != nullptr && *previous == rev.text) continue;
    previous = &rev.text;
    std::vector<std::string> tokens = Tokenize(rev.text);
    for (std::string &t : tokens) t = AsciiLower(t);
    vocabulary.ForEachOccurrence(tokens, [&](const std::string &key) {
      contained.insert(key);
      ++c.occurrences[key];
    });
  }
  for (const std::string &key : contained) ++c.containing[key];

  std::set<std::string> modified;
  for (const LexicalEditInstance &inst : instances) {
    std::string source = PhraseKey(inst.source);
    std::string target = PhraseKey(inst.target);
    modified.insert(source);
    ++c.pairs[source][target];
    ++c.source_total[source];
  }
  for (const std::string &key : modified) ++c.modifying[key];
}

namespace {

void AddInto(std::map<std::string, uint64_t> &dst,
             const std::map<std::string, uint64_t> &src) {
  for (const auto &[key, n] : src) dst[key] += n;
}

}  // namespace

void EditInstanceStore::Merge(const EditInstanceStore &other) {
  for (size_t i = 0; i < corpora_.size(); ++i) {
    CorpusCounts &dst = corpora_[i];
    const CorpusCounts &src = other.corpora_[i];
    dst.articles += src.articles;
    AddInto(dst.containing, src.containing);
    AddInto(dst.modifying, src.modifying);
    AddInto(dst.occurrences, src.occurrences);
    AddInto(dst.source_total, src.source_total);
    for (const auto &[source, targets] : src.pairs) AddInto(dst.pairs[source], targets);
  }
}

EditInstanceStore Merge(EditInstanceStore a, const EditInstanceStore &b) {
  a.Merge(b);
  return a;
}

void EditInstanceStore::Validate() const {
  for (Corpus corpus : {Corpus::kComplex, Corpus::kSimple}) {
    const CorpusCounts &c = counts(corpus);
    std::string where = std::string(CorpusName(corpus)) + " store: ";
    for (const auto &[key, n] : c.modifying) {
      uint64_t containing = CountOf(c.containing, key);
      if (n > containing) {
        ThrowData(where + "topics modifying '" + key + "' (" + std::to_string(n) +
                  ") exceed topics containing it (" + std::to_string(containing) + ")");
      }
    }
    for (const auto &[key, n] : c.containing) {
      if (n > c.articles) {
        ThrowData(where + "topics containing '" + key + "' exceed article count");
      }
    }
    for (const auto &[key, n] : c.source_total) {
      auto it = c.pairs.find(key);
      uint64_t sum = 0;
      if (it != c.pairs.end()) {
        for (const auto &[target, m] : it->second) sum += m;
      }
      if (sum != n) {
        ThrowData(where + "source total of '" + key + "' does not match its pairs");
      }
    }
    for (const auto &[source, targets] : c.pairs) {
      if (!c.source_total.count(source)) {
        ThrowData(where + "pairs of '" + source + "' have no source total");
      }
      if (targets.count(source)) {
        ThrowData(where + "pair with identical sides '" + source + "'");
      }
    }
  }
}

void EditInstanceStore::Save(std::ostream &out) const {
  std::vector<std::string> lines;
  for (Corpus corpus : {Corpus::kComplex, Corpus::kSimple}) {
    const CorpusCounts &c = counts(corpus);
    std::string prefix(CorpusName(corpus));
    prefix.push_back('\t');
    auto emit = [&](std::string_view kind, const std::string &key, uint64_t n) {
      std::string line = prefix;
      line += kind;
      line.push_back('\t');
      line += key;
      line.push_back('\t');
      line += std::to_string(n);
      lines.push_back(std::move(line));
    };
    emit("articles", "*", c.articles);
    for (const auto &[key, n] : c.containing) emit("containing", key, n);
    for (const auto &[key, n] : c.modifying) emit("modifying", key, n);
    for (const auto &[key, n] : c.occurrences) emit("occurrences", key, n);
    for (const auto &[key, n] : c.source_total) emit("source_total", key, n);
    for (const auto &[source, targets] : c.pairs) {
      for (const auto &[target, n] : targets) {
        emit("pair", source + std::string(kPairSeparator) + target, n);
      }
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string &line : lines) out << line << '\n';
}

EditInstanceStore EditInstanceStore::Load(std::istream &in) {
  EditInstanceStore store;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string_view> f = SplitTabs(line);
    std::string where = "store line " + std::to_string(line_number);
    if (f.size() != 4) ThrowData(where + ": expected 4 tab-separated fields");
    Corpus corpus;
    try {
      corpus = ParseCorpus(f[0]);
    } catch (const Error &) {
      ThrowData(where + ": unknown corpus '" + std::string(f[0]) + "'");
    }
    CorpusCounts &c = store.mutable_counts(corpus);
    std::string key(f[2]);
    uint64_t n = ParseUnsigned(f[3], where);
    auto put = [&](std::map<std::string, uint64_t> &map) {
      if (!map.emplace(key, n).second) ThrowData(where + ": duplicate key '" + key + "'");
    };
    std::string_view kind = f[1];
    if (kind == "articles") {
      c.articles = n;
    } else if (kind == "containing") {
      put(c.containing);
    } else if (kind == "modifying") {
      put(c.modifying);
    } else if (kind == "occurrences") {
      put(c.occurrences);
    } else if (kind == "source_total") {
      put(c.source_total);
    } else if (kind == "pair") {
      size_t sep = key.find(kPairSeparator);
      if (sep == std::string::npos) ThrowData(where + ": malformed pair key");
      std::string source = key.substr(0, sep);
      std::string target = key.substr(sep + kPairSeparator.size());
      if (!c.pairs[source].emplace(target, n).second) {
        ThrowData(where + ": duplicate pair '" + key + "'");
      }
    } else {
      ThrowData(where + ": unknown kind '" + std::string(kind) + "'");
    }
  }
  store.Validate();
  return store;
}

}  // namespace lexsimp
