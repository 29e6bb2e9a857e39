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

#include "core/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <thread>

#include "core/tokenize.hpp"

namespace lexsimp {
namespace {

constexpr double kSumTolerance = 1e-9;

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ a);
  h = SplitMix64(h ^ b);
  return SplitMix64(h ^ c);
}

uint64_t UniformBelow(std::mt19937_64 &engine, uint64_t n) {
  uint64_t threshold = (0 - n) % n;
  while (true) {
    uint64_t x = engine();
    if (x >= threshold) return x % n;
  }
}

double UniformUnit(std::mt19937_64 &engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

template <typename T>
void Shuffle(std::vector<T> &items, std::mt19937_64 &engine) {
  for (size_t i = 0; i + 1 < items.size(); ++i) {
    size_t j = i + static_cast<size_t>(UniformBelow(engine, items.size() - i));
    std::swap(items[i], items[j]);
  }
}

constexpr std::array<std::string_view, 48> kNouns = {
    "granite", "harbor",  "orchard", "lantern", "meadow",  "canyon", "glacier", "pottery",
    "bridge",  "village", "forest",  "tower",   "river",   "garden", "market",  "castle",
    "island",  "desert",  "chapel",  "mill",    "quarry",  "lagoon", "plateau", "harvest",
    "cattle",  "library", "station", "fountain", "archive", "valley", "summit",  "ferry",
    "cavern",  "pasture", "foundry", "vineyard", "beacon", "marsh",  "prairie", "citadel",
    "estuary", "kiln",    "dune",    "tundra",  "grove",   "reef",   "cellar",  "bastion"};

constexpr std::array<std::string_view, 4> kFixComments = {"fix typo", "grammar fix",
                                                          "correction", "fixed error"};
constexpr std::array<std::string_view, 3> kTrustedComments = {
    "simplified wording", "simplify", "Simplification of vocabulary"};
constexpr std::array<std::string_view, 3> kPlainComments = {"copyedit", "reword",
                                                            "edit for clarity"};

enum class Op { kNone, kFix, kSimplify };

struct PhraseOp {
  Op op = Op::kNone;
  std::string target;
};

// Per-topic sentence: words before the slot, the slot phrase, words after.
struct TemplateSentence {
  std::string before;
  std::string slot;
  std::string after;

  std::string Render() const { return before + " " + slot + " " + after; }
};

Phrase LowerTokens(std::string_view text) {
  Phrase tokens = Tokenize(text);
  for (std::string &t : tokens) t = AsciiLower(t);
  return tokens;
}

void ValidateTargets(const std::string &phrase, const WeightedTargets &targets,
                     double rate, const char *kind) {
  std::string where = "phrase '" + phrase + "' " + kind + " targets";
  if (rate > 0.0 && targets.empty()) ThrowUsage(where + ": empty distribution");
  if (targets.empty()) return;
  double sum = 0.0;
  Phrase source = LowerTokens(phrase);
  for (const auto &[target, weight] : targets) {
    if (!(weight >= 0.0 && weight <= 1.0)) ThrowUsage(where + ": weight outside [0, 1]");
    sum += weight;
    Phrase t = LowerTokens(target);
    if (t.empty() || t.size() > 5) ThrowUsage(where + ": '" + target + "' must have 1-5 tokens");
    if (t.front() == source.front() || t.back() == source.back()) {
      ThrowUsage(where + ": '" + target + "' shares its first or last token with the phrase");
    }
  }
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    ThrowUsage(where + ": weights sum to " + FormatDouble(sum) + ", expected 1");
  }
}

// Splits `count` draws over the weights by largest remainder; ties go to the
// earlier target.
std::vector<std::string> QuotaTargets(const WeightedTargets &targets, uint64_t count) {
  std::vector<uint64_t> share(targets.size());
  std::vector<std::pair<double, size_t>> remainders;
  uint64_t assigned = 0;
  for (size_t i = 0; i < targets.size(); ++i) {
    double exact = targets[i].second * static_cast<double>(count);
    share[i] = static_cast<uint64_t>(std::floor(exact));
    assigned += share[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto &x, const auto &y) { return x.first > y.first; });
  for (size_t r = 0; assigned < count && r < remainders.size(); ++r, ++assigned) {
    ++share[remainders[r].second];
  }
  std::vector<std::string> out;
  for (size_t i = 0; i < targets.size(); ++i) {
    out.insert(out.end(), share[i], targets[i].first);
  }
  return out;
}

std::string DrawTarget(const WeightedTargets &targets, std::mt19937_64 &engine) {
  double u = UniformUnit(engine);
  double acc = 0.0;
  for (const auto &[target, weight] : targets) {
    acc += weight;
    if (u < acc) return target;
  }
  return targets.back().first;
}

double FixRate(const PlantedPhrase &p, Corpus corpus, double alpha) {
  return corpus == Corpus::kSimple ? p.p_fix : p.p_fix / alpha;
}

// Operations for every (topic, phrase) of one corpus under quota allocation.
std::vector<std::vector<PhraseOp>> AllocateQuota(const GeneratorSpec &spec, Corpus corpus,
                                                 uint64_t topics) {
  std::vector<std::vector<PhraseOp>> ops(topics, std::vector<PhraseOp>(spec.phrases.size()));
  for (size_t k = 0; k < spec.phrases.size(); ++k) {
    const PlantedPhrase &p = spec.phrases[k];
    double fix_rate = FixRate(p, corpus, spec.alpha);
    double simplify_rate = corpus == Corpus::kSimple ? p.p_simplify : 0.0;
    auto n_fix = static_cast<uint64_t>(std::llround(fix_rate * static_cast<double>(topics)));
    auto n_simplify =
        static_cast<uint64_t>(std::llround(simplify_rate * static_cast<double>(topics)));
    n_fix = std::min(n_fix, topics);
    n_simplify = std::min(n_simplify, topics - n_fix);

    std::mt19937_64 engine(DeriveSeed(spec.seed, static_cast<uint64_t>(corpus), k, 0xa11c));
    std::vector<std::string> fix_targets = QuotaTargets(p.fix_targets, n_fix);
    std::vector<std::string> simplify_targets = QuotaTargets(p.simplify_targets, n_simplify);
    Shuffle(fix_targets, engine);
    Shuffle(simplify_targets, engine);

    std::vector<PhraseOp> column;
    column.reserve(topics);
    for (std::string &t : fix_targets) column.push_back({Op::kFix, std::move(t)});
    for (std::string &t : simplify_targets) column.push_back({Op::kSimplify, std::move(t)});
    column.resize(topics);
    Shuffle(column, engine);
    for (uint64_t t = 0; t < topics; ++t) ops[t][k] = std::move(column[t]);
  }
  return ops;
}

std::vector<PhraseOp> DrawBernoulli(const GeneratorSpec &spec, Corpus corpus,
                                    std::mt19937_64 &engine) {
  std::vector<PhraseOp> ops(spec.phrases.size());
  for (size_t k = 0; k < spec.phrases.size(); ++k) {
    const PlantedPhrase &p = spec.phrases[k];
    double fix_rate = FixRate(p, corpus, spec.alpha);
    double simplify_rate = corpus == Corpus::kSimple ? p.p_simplify : 0.0;
    double u = UniformUnit(engine);
    if (u < fix_rate) {
      ops[k] = {Op::kFix, DrawTarget(p.fix_targets, engine)};
    } else if (u < fix_rate + simplify_rate) {
      ops[k] = {Op::kSimplify, DrawTarget(p.simplify_targets, engine)};
    }
  }
  return ops;
}

template <size_t N>
std::string Pick(const std::array<std::string_view, N> &options, std::mt19937_64 &engine) {
  return std::string(options[UniformBelow(engine, N)]);
}

std::string RenderText(const std::vector<TemplateSentence> &sentences) {
  std::string text;
  for (const TemplateSentence &s : sentences) {
    if (!text.empty()) text.push_back('\n');
    text += s.Render();
  }
  return text;
}

VersionSequence GenerateTopic(const GeneratorSpec &spec, Corpus corpus, uint64_t topic,
                              std::vector<PhraseOp> ops, std::mt19937_64 &engine) {
  VersionSequence seq;
  seq.corpus = corpus;
  char id[32];
  std::snprintf(id, sizeof(id), "%c%06llu", corpus == Corpus::kComplex ? 'c' : 's',
                static_cast<unsigned long long>(topic + 1));
  seq.article_id = id;
  seq.title = "Topic " + std::to_string(topic + 1);

  // Two distinct nouns per sentence, drawn without replacement.
  size_t n_sentences = spec.phrases.size() + spec.filler_sentences;
  std::vector<std::string_view> nouns(kNouns.begin(), kNouns.end());
  Shuffle(nouns, engine);
  auto noun = [&](size_t i) { return std::string(nouns[i % nouns.size()]); };

  std::vector<TemplateSentence> sentences;
  for (size_t j = 0; j < spec.phrases.size(); ++j) {
    sentences.push_back({"Record " + std::to_string(j + 1) + " says the " + noun(2 * j),
                         spec.phrases[j].phrase, "the " + noun(2 * j + 1) + " nearby."});
  }
  for (size_t j = spec.phrases.size(); j < n_sentences; ++j) {
    sentences.push_back({"Note " + std::to_string(j + 1) + " lists the", noun(2 * j),
                         "beside the " + noun(2 * j + 1) + "."});
  }

  struct Event {
    enum Kind { kEdit, kNoop, kSwap, kInsert } kind;
    size_t index;
  };
  std::vector<Event> events;
  for (size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].op != Op::kNone) events.push_back({Event::kEdit, k});
  }
  for (size_t i = 0; i < spec.noop_revisions; ++i) events.push_back({Event::kNoop, 0});
  if (spec.distractors) {
    if (spec.filler_sentences > 0) events.push_back({Event::kSwap, 0});
    events.push_back({Event::kInsert, 0});
  }
  Shuffle(events, engine);

  auto push = [&](std::optional<std::string> comment) {
    Revision rev;
    rev.article_id = seq.article_id;
    rev.revision_index = static_cast<int64_t>(seq.revisions.size());
    rev.source_index = rev.revision_index;
    rev.comment = std::move(comment);
    rev.text = RenderText(sentences);
    seq.revisions.push_back(std::move(rev));
  };
  push(std::string("new article"));

  size_t next_noun = 2 * n_sentences;
  for (const Event &event : events) {
    switch (event.kind) {
      case Event::kEdit: {
        const PhraseOp &op = ops[event.index];
        sentences[event.index].slot = op.target;
        if (op.op == Op::kFix) {
          push(Pick(kFixComments, engine));
        } else if (UniformUnit(engine) < spec.trusted_comment_rate) {
          push(Pick(kTrustedComments, engine));
        } else {
          push(Pick(kPlainComments, engine));
        }
        break;
      }
      case Event::kNoop:
        push(std::nullopt);
        break;
      case Event::kSwap: {
        size_t j = spec.phrases.size() + UniformBelow(engine, spec.filler_sentences);
        sentences[j].slot = noun(next_noun++);
        push(std::string("copyedit"));
        break;
      }
      case Event::kInsert: {
        size_t pos = UniformBelow(engine, sentences.size() + 1);
        TemplateSentence added{"An added remark mentions the", noun(next_noun++),
                               "and the " + noun(next_noun++) + "."};
        sentences.insert(sentences.begin() + static_cast<std::ptrdiff_t>(pos), added);
        push(std::string("added detail"));
        break;
      }
    }
  }
  return seq;
}

std::vector<VersionSequence> GenerateCorpus(const GeneratorSpec &spec, Corpus corpus,
                                            uint64_t topics, size_t workers) {
  std::vector<std::vector<PhraseOp>> quota;
  if (spec.allocation == Allocation::kQuota) quota = AllocateQuota(spec, corpus, topics);

  std::vector<VersionSequence> out(topics);
  auto run = [&](size_t worker) {
    for (uint64_t t = worker; t < topics; t += workers) {
      std::mt19937_64 engine(DeriveSeed(spec.seed, static_cast<uint64_t>(corpus), t, 0x70c));
      std::vector<PhraseOp> ops = spec.allocation == Allocation::kQuota
                                      ? quota[t]
                                      : DrawBernoulli(spec, corpus, engine);
      out[t] = GenerateTopic(spec, corpus, t, std::move(ops), engine);
    }
  };
  workers = std::max<size_t>(1, std::min<size_t>(workers, topics));
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (std::thread &th : threads) th.join();
  }
  return out;
}

PlantedPhrase Planted(std::string phrase, double p_fix, double p_simplify,
                      WeightedTargets fix_targets, WeightedTargets simplify_targets) {
  return {std::move(phrase), p_fix, p_simplify, std::move(fix_targets),
          std::move(simplify_targets)};
}

}  // namespace

void GeneratorSpec::Validate() const {
  if (phrases.empty()) ThrowUsage("generator spec has no phrases");
  if (!(alpha > 0.0 && alpha <= 1.0)) ThrowUsage("generator alpha must be in (0, 1]");
  if (!(trusted_comment_rate >= 0.0 && trusted_comment_rate <= 1.0)) {
    ThrowUsage("trusted comment rate must be in [0, 1]");
  }
  if (phrases.size() + filler_sentences > kNouns.size() / 2) {
    ThrowUsage("at most " + std::to_string(kNouns.size() / 2) +
               " phrases plus filler sentences are supported");
  }
  std::map<std::string, int> seen;
  for (const PlantedPhrase &p : phrases) {
    Phrase tokens = LowerTokens(p.phrase);
    if (tokens.empty() || tokens.size() > 5) {
      ThrowUsage("planted phrase '" + p.phrase + "' must have 1-5 tokens");
    }
    if (seen[PhraseKey(tokens)]++ > 0) ThrowUsage("duplicate planted phrase '" + p.phrase + "'");
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(p.p_fix) || !in_unit(p.p_simplify) || p.p_fix + p.p_simplify > 1.0 + 1e-12) {
      ThrowUsage("phrase '" + p.phrase + "': rates must lie in [0, 1] with fix + simplify <= 1");
    }
    if (p.p_fix / alpha > 1.0 + 1e-12) {
      ThrowUsage("phrase '" + p.phrase + "': complex-corpus fix rate p_fix / alpha exceeds 1");
    }
    ValidateTargets(p.phrase, p.fix_targets, p.p_fix, "fix");
    ValidateTargets(p.phrase, p.simplify_targets, p.p_simplify, "simplify");
  }
}

GeneratorSpec GeneratorSpec::Default() {
  GeneratorSpec spec;
  spec.phrases = {
      Planted("indigenous", 0.05, 0.6, {{"endemic", 1.0}}, {{"native", 0.7}, {"local", 0.3}}),
      Planted("annually", 0.08, 0.6, {{"each year", 1.0}},
              {{"every year", 0.8}, {"yearly", 0.2}}),
      Planted("collaborate", 0.1, 0.6, {{"collaborated", 1.0}},
              {{"work together", 0.75}, {"cooperate", 0.25}}),
      Planted("permitted", 0.05, 0.3, {{"authorized", 1.0}}, {{"allowed", 0.7}, {"let", 0.3}}),
      Planted("concealed", 0.1, 0.3, {{"obscured", 0.5}, {"veiled", 0.5}},
              {{"hidden", 0.6}, {"covered", 0.4}}),
      Planted("stands for", 0.05, 0.3, {{"represents", 1.0}},
              {{"is the same as", 0.8}, {"means", 0.2}}),
      Planted("purchased", 0.1, 0.1, {{"acquired", 1.0}}, {{"bought", 1.0}}),
      Planted("commenced", 0.05, 0.1, {{"initiated", 1.0}}, {{"started", 1.0}}),
      Planted("resided", 0.08, 0.0, {{"dwelt", 1.0}}, {}),
      Planted("obtained", 0.1, 0.0, {{"secured", 1.0}}, {}),
  };
  return spec;
}

GeneratedCorpora Generate(const GeneratorSpec &spec, size_t workers) {
  spec.Validate();
  GeneratedCorpora out;
  out.complex = GenerateCorpus(spec, Corpus::kComplex, spec.complex_topics, workers);
  out.simple = GenerateCorpus(spec, Corpus::kSimple, spec.simple_topics, workers);
  return out;
}

void WriteGroundTruth(std::ostream &out, const GeneratorSpec &spec) {
  out << "#A\tkind\ta\tp\n";
  for (const PlantedPhrase &p : spec.phrases) {
    out << p.phrase << "\tfix\t-\t" << FormatDouble(p.p_fix) << '\n';
    out << p.phrase << "\tsimplify\t-\t" << FormatDouble(p.p_simplify) << '\n';
    for (const auto &[target, weight] : p.fix_targets) {
      out << p.phrase << "\tfix_target\t" << target << '\t' << FormatDouble(weight) << '\n';
    }
    for (const auto &[target, weight] : p.simplify_targets) {
      out << p.phrase << "\tsimplify_target\t" << target << '\t' << FormatDouble(weight)
          << '\n';
    }
  }
}

std::vector<PlantedPhrase> ReadPlantedPhrases(std::istream &in) {
  std::vector<PlantedPhrase> phrases;
  std::map<std::string, size_t> index;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string where = "ground truth line " + std::to_string(line_number);
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 4) ThrowData(where + ": expected A<TAB>kind<TAB>a<TAB>p");
    std::string phrase(f[0]);
    auto [it, inserted] = index.emplace(phrase, phrases.size());
    if (inserted) phrases.push_back({phrase, 0.0, 0.0, {}, {}});
    PlantedPhrase &p = phrases[it->second];
    double value = ParseDouble(f[3], where);
    if (f[1] == "fix") {
      p.p_fix = value;
    } else if (f[1] == "simplify") {
      p.p_simplify = value;
    } else if (f[1] == "fix_target") {
      p.fix_targets.emplace_back(std::string(f[2]), value);
    } else if (f[1] == "simplify_target") {
      p.simplify_targets.emplace_back(std::string(f[2]), value);
    } else {
      ThrowData(where + ": unknown kind '" + std::string(f[1]) + "'");
    }
  }
  return phrases;
}

std::string ModalSimplifyTarget(const PlantedPhrase &phrase) {
  std::string best;
  double best_weight = -1.0;
  for (const auto &[target, weight] : phrase.simplify_targets) {
    if (weight > best_weight) {
      best = target;
      best_weight = weight;
    }
  }
  return best;
}

}  // namespace lexsimp
