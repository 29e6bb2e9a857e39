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

#include "core/edit_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lexsimp {

void ModelConfig::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    ThrowUsage("alpha must lie in [0, 1], got " + FormatDouble(alpha));
  }
}

std::optional<double> TopicFraction(const EditInstanceStore &store, Corpus corpus,
                                    const std::string &phrase) {
  const CorpusCounts &c = store.counts(corpus);
  uint64_t containing = CountOf(c.containing, phrase);
  if (containing == 0) return std::nullopt;
  return static_cast<double>(CountOf(c.modifying, phrase)) /
         static_cast<double>(containing);
}

double EstimateSimplifyProb(double f_complex, double f_simple, double alpha) {
  return std::max(0.0, f_simple - alpha * f_complex);
}

namespace {

std::optional<Distribution> Conditional(const CorpusCounts &c, const std::string &phrase) {
  uint64_t total = CountOf(c.source_total, phrase);
  auto it = c.pairs.find(phrase);
  if (total == 0 || it == c.pairs.end()) return std::nullopt;
  Distribution dist;
  for (const auto &[target, n] : it->second) {
    dist[target] = static_cast<double>(n) / static_cast<double>(total);
  }
  return dist;
}

double Lookup(const std::optional<Distribution> &dist, const std::string &key) {
  if (!dist) return 0.0;
  auto it = dist->find(key);
  return it == dist->end() ? 0.0 : it->second;
}

}  // namespace

std::optional<Distribution> EstimateFixConditional(const EditInstanceStore &store,
                                                   const std::string &phrase) {
  return Conditional(store.counts(Corpus::kComplex), phrase);
}

std::optional<Distribution> EstimateAnyConditional(const EditInstanceStore &store,
                                                   const std::string &phrase) {
  return Conditional(store.counts(Corpus::kSimple), phrase);
}

double SimplifyConditionalRaw(double p_any, double p_fix, double p_fix_pair,
                              double p_simplify) {
  return (p_any - p_fix * p_fix_pair) / p_simplify;
}

bool EstimateSimplifyConditional(PhraseEstimate *estimate) {
  if (!estimate->simplify_defined()) return false;
  for (TargetEstimate &t : estimate->targets) {
    t.p_simplify_raw = SimplifyConditionalRaw(t.p_any, estimate->p_fix, t.p_fix_pair,
                                              estimate->p_simplify);
    t.p_simplify = std::clamp(t.p_simplify_raw, 0.0, 1.0);
  }
  return true;
}

std::optional<PhraseEstimate> EstimatePhrase(const EditInstanceStore &store,
                                             const std::string &phrase, double alpha) {
  std::optional<double> f_complex = TopicFraction(store, Corpus::kComplex, phrase);
  std::optional<double> f_simple = TopicFraction(store, Corpus::kSimple, phrase);
  if (!f_complex || !f_simple) return std::nullopt;

  PhraseEstimate est;
  est.phrase = phrase;
  est.f_complex = *f_complex;
  est.f_simple = *f_simple;
  est.p_fix = alpha * *f_complex;
  est.p_simplify = EstimateSimplifyProb(*f_complex, *f_simple, alpha);

  std::optional<Distribution> fix = EstimateFixConditional(store, phrase);
  std::optional<Distribution> any = EstimateAnyConditional(store, phrase);
  est.has_fix_evidence = fix.has_value();
  est.has_any_evidence = any.has_value();

  std::set<std::string> targets;
  if (fix) for (const auto &[a, p] : *fix) targets.insert(a);
  if (any) for (const auto &[a, p] : *any) targets.insert(a);
  for (const std::string &a : targets) {
    TargetEstimate t;
    t.target = a;
    t.p_any = Lookup(any, a);
    t.p_fix_pair = Lookup(fix, a);
    est.targets.push_back(std::move(t));
  }
  EstimateSimplifyConditional(&est);
  return est;
}

std::vector<PhraseEstimate> EstimateAll(const EditInstanceStore &store, double alpha) {
  std::vector<PhraseEstimate> out;
  const auto &complex_containing = store.counts(Corpus::kComplex).containing;
  for (const auto &[phrase, n] : store.counts(Corpus::kSimple).containing) {
    if (!complex_containing.count(phrase)) continue;
    if (auto est = EstimatePhrase(store, phrase, alpha)) out.push_back(std::move(*est));
  }
  return out;
}

namespace {

bool Eligible(const EditInstanceStore &store, const std::string &phrase,
              const ModelConfig &config) {
  for (Corpus corpus : {Corpus::kComplex, Corpus::kSimple}) {
    const CorpusCounts &c = store.counts(corpus);
    uint64_t freq = config.phrase_freq == PhraseFreqMode::kTopics
                        ? CountOf(c.containing, phrase)
                        : CountOf(c.occurrences, phrase);
    if (freq < config.min_phrase_freq) return false;
    if (CountOf(c.source_total, phrase) < config.min_pair_freq) return false;
  }
  return true;
}

std::vector<SimplificationCandidate> RankAll(const EditInstanceStore &store,
                                             const ModelConfig &config) {
  config.Validate();
  std::vector<SimplificationCandidate> ranked;
  const auto &complex_containing = store.counts(Corpus::kComplex).containing;
  for (const auto &[phrase, n] : store.counts(Corpus::kSimple).containing) {
    if (!complex_containing.count(phrase)) continue;
    if (!Eligible(store, phrase, config)) continue;
    std::optional<PhraseEstimate> est = EstimatePhrase(store, phrase, config.alpha);
    if (!est || !est->simplify_defined() || est->targets.empty()) continue;

    // Clamping saturates several targets at 1, so ties fall back to the
    // unclamped value and then to P(a|A).
    auto better = [](const TargetEstimate &x, const TargetEstimate &y) {
      if (x.p_simplify != y.p_simplify) return x.p_simplify > y.p_simplify;
      if (x.p_simplify_raw != y.p_simplify_raw) return x.p_simplify_raw > y.p_simplify_raw;
      return x.p_any > y.p_any;
    };
    const TargetEstimate *best = nullptr;
    for (const TargetEstimate &t : est->targets) {
      if (best == nullptr || better(t, *best)) best = &t;  // sorted: earlier wins ties
    }
    SimplificationCandidate cand;
    cand.source = phrase;
    cand.target = best->target;
    cand.score = est->p_simplify;
    cand.detail = best->p_simplify;
    cand.method = Method::kEditModel;
    ranked.push_back(std::move(cand));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const SimplificationCandidate &x, const SimplificationCandidate &y) {
                     if (x.score != y.score) return x.score > y.score;
                     return x.source < y.source;
                   });
  return ranked;
}

}  // namespace

std::vector<SimplificationCandidate> RankEditModel(const EditInstanceStore &store,
                                                   const ModelConfig &config) {
  std::vector<SimplificationCandidate> ranked = RankAll(store, config);
  if (config.top_k > 0 && ranked.size() > config.top_k) ranked.resize(config.top_k);
  return ranked;
}

size_t CountEligiblePhrases(const EditInstanceStore &store, const ModelConfig &config) {
  return RankAll(store, config).size();
}

}  // namespace lexsimp
