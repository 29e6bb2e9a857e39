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

#include "core/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "core/tokenize.hpp"

namespace lexsimp {
namespace {

uint64_t UniformBelow(std::mt19937_64 &engine, uint64_t n) {
  uint64_t threshold = (0 - n) % n;
  while (true) {
    uint64_t x = engine();
    if (x >= threshold) return x % n;
  }
}

template <typename T>
void Shuffle(std::vector<T> &items, std::mt19937_64 &engine) {
  for (size_t i = 0; i + 1 < items.size(); ++i) {
    size_t j = i + static_cast<size_t>(UniformBelow(engine, items.size() - i));
    std::swap(items[i], items[j]);
  }
}

std::string Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// Published full-dump results, shown next to the measured rows.
struct ReferenceRow {
  const char *method;
  const char *cell;
  const char *pairs;
};
constexpr ReferenceRow kReferenceRows[] = {
    {"dictionary", "86% (-0-0)", "2000"}, {"edit_model", "77% (-0-1)", "1079"},
    {"simpl", "66% (-0-0)", "2970"},      {"frequent", "17% (-1-7)", "-"},
    {"random", "17% (-1-4)", "-"},
};

}  // namespace

RawLabel ParseRawLabel(std::string_view text) {
  std::string key = AsciiLower(Trim(text));
  std::replace(key.begin(), key.end(), '_', ' ');
  if (key == "simpler") return RawLabel::kSimpler;
  if (key == "more complex") return RawLabel::kMoreComplex;
  if (key == "equal") return RawLabel::kEqual;
  if (key == "unrelated") return RawLabel::kUnrelated;
  if (key == "?" || key == "unsure") return RawLabel::kUnsure;
  ThrowData("unknown judgment label '" + std::string(text) + "'");
}

std::string_view RawLabelName(RawLabel label) {
  switch (label) {
    case RawLabel::kSimpler: return "simpler";
    case RawLabel::kMoreComplex: return "more_complex";
    case RawLabel::kEqual: return "equal";
    case RawLabel::kUnrelated: return "unrelated";
    case RawLabel::kUnsure: return "?";
  }
  return "?";
}

Orientation ParseOrientation(std::string_view text) {
  std::string key = AsciiLower(Trim(text));
  if (key == "forward") return Orientation::kForward;
  if (key == "reversed") return Orientation::kReversed;
  ThrowData("unknown orientation '" + std::string(text) + "'");
}

std::string_view OrientationName(Orientation orientation) {
  return orientation == Orientation::kForward ? "forward" : "reversed";
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kSimplification: return "simplification";
    case Verdict::kNotSimplification: return "not_simplification";
    case Verdict::kUnsure: return "unsure";
    case Verdict::kNoMajority: return "no_majority";
  }
  return "no_majority";
}

CollapsedLabel CollapseLabel(RawLabel label, Orientation orientation) {
  switch (label) {
    case RawLabel::kSimpler:
      return orientation == Orientation::kForward ? CollapsedLabel::kSimplification
                                                  : CollapsedLabel::kNotSimplification;
    case RawLabel::kMoreComplex:
      return orientation == Orientation::kReversed ? CollapsedLabel::kSimplification
                                                   : CollapsedLabel::kNotSimplification;
    case RawLabel::kUnsure:
      return CollapsedLabel::kUnsure;
    case RawLabel::kEqual:
    case RawLabel::kUnrelated:
      return CollapsedLabel::kNotSimplification;
  }
  return CollapsedLabel::kNotSimplification;
}

JudgedPair MajorityVerdict(const AnnotationRecord &record) {
  JudgedPair judged{record.source, record.target, Verdict::kNoMajority};
  size_t counts[3] = {0, 0, 0};
  for (RawLabel label : record.labels) {
    ++counts[static_cast<size_t>(CollapseLabel(label, record.orientation))];
  }
  size_t n = record.labels.size();
  for (size_t c = 0; c < 3; ++c) {
    if (2 * counts[c] > n) {
      judged.verdict = static_cast<Verdict>(c);
      break;
    }
  }
  return judged;
}

std::string NormalizePhrase(std::string_view phrase) {
  return PhraseKey(Tokenize(phrase));
}

std::string PrecisionResult::Cell() const {
  std::ostringstream out;
  if (k == 0) {
    out << "n/a";
  } else {
    long percent = std::lround(100.0 * static_cast<double>(correct) / static_cast<double>(k));
    out << percent << '%';
  }
  out << " (-" << no_majority << '-' << unsure << ')';
  return out.str();
}

PrecisionResult PrecisionAtK(std::span<const SimplificationCandidate> ranked,
                             const Judgments &judgments, size_t k,
                             PrecisionDenominator denominator) {
  PrecisionResult result;
  result.k = std::min(k, ranked.size());
  for (size_t i = 0; i < result.k; ++i) {
    PairKey key{NormalizePhrase(ranked[i].source), NormalizePhrase(ranked[i].target)};
    auto it = judgments.find(key);
    if (it == judgments.end()) {
      ThrowData("no judgment for candidate '" + ranked[i].source + " -> " +
                ranked[i].target + "' at rank " + std::to_string(i + 1));
    }
    switch (it->second) {
      case Verdict::kSimplification: ++result.correct; break;
      case Verdict::kNoMajority: ++result.no_majority; break;
      case Verdict::kUnsure: ++result.unsure; break;
      case Verdict::kNotSimplification: break;
    }
  }
  size_t denom = denominator == PrecisionDenominator::kK
                     ? result.k
                     : result.k - result.no_majority - result.unsure;
  if (denom == 0) {
    ThrowData("precision undefined: no judged candidates remain among the top " +
              std::to_string(result.k));
  }
  result.precision = static_cast<double>(result.correct) / static_cast<double>(denom);
  return result;
}

double FleissKappa(std::span<const std::vector<uint64_t>> items) {
  if (items.empty()) ThrowData("Fleiss' kappa needs at least one item");
  size_t categories = items[0].size();
  uint64_t n = 0;
  for (uint64_t c : items[0]) n += c;
  if (n < 2) ThrowData("Fleiss' kappa needs at least two judges per item");

  std::vector<double> category_totals(categories, 0.0);
  double agreement_sum = 0.0;
  for (const std::vector<uint64_t> &row : items) {
    if (row.size() != categories) ThrowData("Fleiss' kappa: inconsistent category count");
    uint64_t row_n = 0;
    double squares = 0.0;
    for (size_t j = 0; j < categories; ++j) {
      row_n += row[j];
      squares += static_cast<double>(row[j]) * static_cast<double>(row[j]);
      category_totals[j] += static_cast<double>(row[j]);
    }
    if (row_n != n) {
      ThrowData("Fleiss' kappa needs the same number of judges for every item (" +
                std::to_string(n) + " vs " + std::to_string(row_n) + ")");
    }
    double nd = static_cast<double>(n);
    agreement_sum += (squares - nd) / (nd * (nd - 1.0));
  }
  double num_items = static_cast<double>(items.size());
  double observed = agreement_sum / num_items;
  double expected = 0.0;
  for (double total : category_totals) {
    double p = total / (num_items * static_cast<double>(n));
    expected += p * p;
  }
  if (expected >= 1.0) {
    // Every label in one category: agreement is perfect by construction.
    return 1.0;
  }
  return (observed - expected) / (1.0 - expected);
}

double FleissKappa(std::span<const std::vector<CollapsedLabel>> item_labels) {
  std::vector<std::vector<uint64_t>> counts;
  counts.reserve(item_labels.size());
  for (const auto &labels : item_labels) {
    std::vector<uint64_t> row(3, 0);
    for (CollapsedLabel label : labels) ++row[static_cast<size_t>(label)];
    counts.push_back(std::move(row));
  }
  return FleissKappa(std::span<const std::vector<uint64_t>>(counts));
}

void TransformationDictionary::Add(std::string_view complex_phrase,
                                   std::string_view simple_phrase) {
  pairs_.insert({NormalizePhrase(complex_phrase), NormalizePhrase(simple_phrase)});
}

bool TransformationDictionary::Contains(std::string_view complex_phrase,
                                        std::string_view simple_phrase) const {
  return pairs_.count({NormalizePhrase(complex_phrase), NormalizePhrase(simple_phrase)}) > 0;
}

TransformationDictionary TransformationDictionary::Load(std::istream &in) {
  TransformationDictionary dict;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() < 2 || NormalizePhrase(f[0]).empty() || NormalizePhrase(f[1]).empty()) {
      ThrowData("dictionary line " + std::to_string(line_number) +
                ": expected complex<TAB>simple");
    }
    dict.Add(f[0], f[1]);
  }
  return dict;
}

OverlapResult DictionaryOverlap(std::span<const SimplificationCandidate> candidates,
                                const TransformationDictionary &dictionary,
                                const Judgments &judgments) {
  OverlapResult result;
  for (const SimplificationCandidate &c : candidates) {
    auto it = judgments.find({NormalizePhrase(c.source), NormalizePhrase(c.target)});
    if (it == judgments.end() || it->second != Verdict::kSimplification) continue;
    ++result.correct;
    if (!dictionary.Contains(c.source, c.target)) ++result.absent;
  }
  if (result.correct > 0) {
    result.fraction = static_cast<double>(result.absent) / static_cast<double>(result.correct);
  }
  return result;
}

std::vector<BatchItem> BuildEvaluationBatch(
    std::span<const std::vector<SimplificationCandidate>> per_method,
    const TransformationDictionary *dictionary, size_t dictionary_sample, uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<BatchItem> items;
  std::map<PairKey, size_t> index;
  auto add = [&](const std::string &source, const std::string &target,
                 const std::string &provenance) {
    PairKey key{NormalizePhrase(source), NormalizePhrase(target)};
    auto [it, inserted] = index.emplace(key, items.size());
    if (inserted) {
      BatchItem item;
      item.source = key.first;
      item.target = key.second;
      items.push_back(std::move(item));
    }
    auto &prov = items[it->second].provenance;
    if (std::find(prov.begin(), prov.end(), provenance) == prov.end()) {
      prov.push_back(provenance);
    }
  };
  for (const auto &list : per_method) {
    for (const SimplificationCandidate &c : list) {
      add(c.source, c.target, std::string(MethodName(c.method)));
    }
  }
  if (dictionary != nullptr && dictionary_sample > 0) {
    std::vector<PairKey> pool(dictionary->pairs().begin(), dictionary->pairs().end());
    Shuffle(pool, engine);
    if (pool.size() > dictionary_sample) pool.resize(dictionary_sample);
    for (const PairKey &p : pool) add(p.first, p.second, "dictionary");
  }
  Shuffle(items, engine);
  for (size_t i = 0; i < items.size(); ++i) {
    items[i].pair_id = i + 1;
    items[i].orientation = (engine() >> 63) != 0 ? Orientation::kReversed
                                                 : Orientation::kForward;
  }
  return items;
}

void WriteBatchManifest(std::ostream &out, std::span<const BatchItem> batch) {
  out << "#pair_id\tshown\tA\ta\torientation\tprovenance\n";
  for (const BatchItem &item : batch) {
    const std::string &left = item.orientation == Orientation::kForward ? item.source : item.target;
    const std::string &right = item.orientation == Orientation::kForward ? item.target : item.source;
    std::string provenance;
    for (const std::string &p : item.provenance) {
      if (!provenance.empty()) provenance.push_back(',');
      provenance += p;
    }
    out << item.pair_id << '\t' << left << " -> " << right << '\t' << item.source << '\t'
        << item.target << '\t' << OrientationName(item.orientation) << '\t' << provenance
        << '\n';
  }
}

std::vector<BatchItem> ReadBatchManifest(std::istream &in) {
  std::vector<BatchItem> batch;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::string where = "manifest line " + std::to_string(line_number);
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 6) ThrowData(where + ": expected 6 tab-separated fields");
    BatchItem item;
    item.pair_id = ParseUnsigned(f[0], where);
    item.source = std::string(f[2]);
    item.target = std::string(f[3]);
    item.orientation = ParseOrientation(f[4]);
    std::string_view prov = f[5];
    while (!prov.empty()) {
      size_t comma = prov.find(',');
      item.provenance.emplace_back(prov.substr(0, comma));
      if (comma == std::string_view::npos) break;
      prov.remove_prefix(comma + 1);
    }
    batch.push_back(std::move(item));
  }
  return batch;
}

std::vector<JudgmentRow> ReadJudgments(std::istream &in) {
  std::vector<JudgmentRow> rows;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string where = "judgment line " + std::to_string(line_number);
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 3) ThrowData(where + ": expected pair_id<TAB>judge_id<TAB>label");
    JudgmentRow row;
    row.pair_id = ParseUnsigned(f[0], where);
    row.judge = std::string(f[1]);
    try {
      row.label = ParseRawLabel(f[2]);
    } catch (const Error &e) {
      ThrowData(where + ": " + e.what());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::map<std::string, std::string> ReadJudgeGroups(std::istream &in) {
  std::map<std::string, std::string> groups;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 2) {
      ThrowData("judges line " + std::to_string(line_number) + ": expected judge_id<TAB>group");
    }
    groups[std::string(f[0])] = std::string(f[1]);
  }
  return groups;
}

std::map<uint64_t, AnnotationRecord> BuildRecords(std::span<const BatchItem> batch,
                                                  std::span<const JudgmentRow> rows,
                                                  const std::set<std::string> &judge_filter) {
  std::map<uint64_t, const BatchItem *> by_id;
  for (const BatchItem &item : batch) by_id[item.pair_id] = &item;
  std::map<uint64_t, AnnotationRecord> records;
  for (const JudgmentRow &row : rows) {
    if (!judge_filter.empty() && !judge_filter.count(row.judge)) continue;
    auto it = by_id.find(row.pair_id);
    if (it == by_id.end()) {
      ThrowData("judgment for unknown pair_id " + std::to_string(row.pair_id));
    }
    AnnotationRecord &record = records[row.pair_id];
    record.source = it->second->source;
    record.target = it->second->target;
    record.orientation = it->second->orientation;
    record.labels.push_back(row.label);
  }
  return records;
}

Judgments VerdictsFor(const std::map<uint64_t, AnnotationRecord> &records) {
  Judgments judgments;
  for (const auto &[id, record] : records) {
    JudgedPair judged = MajorityVerdict(record);
    judgments[{NormalizePhrase(judged.source), NormalizePhrase(judged.target)}] =
        judged.verdict;
  }
  return judgments;
}

void WriteReportText(std::ostream &out, const EvalReport &report) {
  out << "Precision at K=" << report.k;
  if (!report.verdict_group.empty()) out << " (verdicts from judge group '" << report.verdict_group << "')";
  out << "\n\n";
  out << std::left << std::setw(14) << "method" << std::setw(14) << "prec@K" << std::setw(12)
      << "precision" << std::setw(10) << "pairs" << "correct & not in dictionary\n";
  for (const MethodReport &m : report.methods) {
    std::ostringstream precision;
    precision << std::fixed << std::setprecision(4) << m.precision.precision;
    std::string overlap = "-";
    if (m.overlap) {
      std::ostringstream o;
      o << std::lround(100.0 * m.overlap->fraction) << "% (" << m.overlap->absent << "/"
        << m.overlap->correct << ")";
      overlap = o.str();
    }
    out << std::left << std::setw(14) << m.method << std::setw(14) << m.precision.Cell()
        << std::setw(12) << precision.str() << std::setw(10) << m.pairs << overlap << "\n";
  }
  if (!report.kappa.empty()) {
    out << "\nInter-annotator agreement (Fleiss' kappa, collapsed labels)\n";
    for (const auto &[group, kappa] : report.kappa) {
      out << "  " << std::left << std::setw(12) << group << std::fixed << std::setprecision(4)
          << kappa;
      auto it = report.all_agree.find(group);
      if (it != report.all_agree.end()) {
        out << "  unanimous " << std::setprecision(1) << 100.0 * it->second << "%";
      }
      out << "\n";
    }
  }
  out << "\nReference (published full-dump results, K=100; not reproducible here)\n";
  for (const ReferenceRow &row : kReferenceRows) {
    out << "  " << std::left << std::setw(12) << row.method << std::setw(14) << row.cell
        << row.pairs << "\n";
  }
  out << "  kappa: native 0.69, non-native 0.49\n";
}

void WriteReportTsv(std::ostream &out, const EvalReport &report) {
  out << "#kind\tname\tcell\tprecision\tcorrect\tk\tno_majority\tunsure\tpairs\t"
         "correct_not_in_dictionary\tcorrect_judged\n";
  for (const MethodReport &m : report.methods) {
    out << "method\t" << m.method << '\t' << m.precision.Cell() << '\t'
        << FormatDouble(m.precision.precision) << '\t' << m.precision.correct << '\t'
        << m.precision.k << '\t' << m.precision.no_majority << '\t' << m.precision.unsure
        << '\t' << m.pairs << '\t';
    if (m.overlap) {
      out << m.overlap->absent << '\t' << m.overlap->correct;
    } else {
      out << "-\t-";
    }
    out << '\n';
  }
  for (const auto &[group, kappa] : report.kappa) {
    out << "kappa\t" << group << "\t-\t" << FormatDouble(kappa) << "\t-\t-\t-\t-\t-\t-\t-\n";
  }
  for (const ReferenceRow &row : kReferenceRows) {
    out << "reference\t" << row.method << '\t' << row.cell << "\t-\t-\t100\t-\t-\t" << row.pairs
        << "\t-\t-\n";
  }
}

}  // namespace lexsimp
