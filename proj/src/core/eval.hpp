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

#ifndef LEXSIMP_CORE_EVAL_HPP_
#define LEXSIMP_CORE_EVAL_HPP_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

enum class RawLabel { kSimpler, kMoreComplex, kEqual, kUnrelated, kUnsure };
enum class Orientation { kForward, kReversed };  // shown as A -> a, or a -> A
enum class CollapsedLabel { kSimplification, kNotSimplification, kUnsure };
enum class Verdict { kSimplification, kNotSimplification, kUnsure, kNoMajority };

// Accepts simpler, "more complex" (or more_complex), equal, unrelated, and
// "?" (or unsure), case-insensitively. Anything else is a kData error.
RawLabel ParseRawLabel(std::string_view text);
std::string_view RawLabelName(RawLabel label);
Orientation ParseOrientation(std::string_view text);
std::string_view OrientationName(Orientation orientation);
std::string_view VerdictName(Verdict verdict);

// "simpler" on the forward orientation and "more complex" on the reversed one
// are simplifications; "?" stays unsure; everything else is not.
CollapsedLabel CollapseLabel(RawLabel label, Orientation orientation);

struct AnnotationRecord {
  std::string source;
  std::string target;
  Orientation orientation = Orientation::kForward;
  std::vector<RawLabel> labels;  // one per judge
};

struct JudgedPair {
  std::string source;
  std::string target;
  Verdict verdict = Verdict::kNoMajority;
};

// Strict majority over collapsed labels; otherwise kNoMajority.
JudgedPair MajorityVerdict(const AnnotationRecord &record);

using PairKey = std::pair<std::string, std::string>;
using Judgments = std::map<PairKey, Verdict>;

// Lowercased tokens joined by spaces, the form used for pair lookups.
std::string NormalizePhrase(std::string_view phrase);

enum class PrecisionDenominator {
  kDiscardAdjusted,  // correct / (K - no_majority - unsure)
  kK,                // correct / K
};

struct PrecisionResult {
  size_t k = 0;
  size_t correct = 0;
  size_t no_majority = 0;  // x in "(-x-y)"
  size_t unsure = 0;       // y in "(-x-y)"
  double precision = 0.0;

  // Table cell: correct pairs as a percentage of K, followed by the discard
  // counts, e.g. "77% (-0-1)".
  std::string Cell() const;
};

// Precision over the first min(K, size) candidates. Every one of them must be
// judged (kData error naming the pair otherwise); when every candidate is
// discarded the discard-adjusted precision is undefined and also an error.
PrecisionResult PrecisionAtK(std::span<const SimplificationCandidate> ranked,
                             const Judgments &judgments, size_t k,
                             PrecisionDenominator denominator =
                                 PrecisionDenominator::kDiscardAdjusted);

// Fleiss' kappa. Each row holds per-category label counts for one item; all
// rows must sum to the same number of judges n >= 2.
double FleissKappa(std::span<const std::vector<uint64_t>> item_category_counts);

// Convenience form over collapsed labels, one vector of judge labels per item.
double FleissKappa(std::span<const std::vector<CollapsedLabel>> item_labels);

class TransformationDictionary {
 public:
  void Add(std::string_view complex_phrase, std::string_view simple_phrase);
  bool Contains(std::string_view complex_phrase, std::string_view simple_phrase) const;
  size_t size() const { return pairs_.size(); }
  const std::set<PairKey> &pairs() const { return pairs_; }

  // TSV of complex<TAB>simple; blank lines and lines starting with '#' are
  // skipped.
  static TransformationDictionary Load(std::istream &in);

 private:
  std::set<PairKey> pairs_;
};

struct OverlapResult {
  size_t correct = 0;  // candidates judged as simplifications
  size_t absent = 0;   // of those, pairs missing from the dictionary
  double fraction = 0.0;  // absent / correct; 0 when nothing is correct
};

OverlapResult DictionaryOverlap(std::span<const SimplificationCandidate> candidates,
                                const TransformationDictionary &dictionary,
                                const Judgments &judgments);

struct BatchItem {
  uint64_t pair_id = 0;
  std::string source;
  std::string target;
  Orientation orientation = Orientation::kForward;
  std::vector<std::string> provenance;  // producing methods, "dictionary"
};

// Union of the per-method lists plus `dictionary_sample` random dictionary
// pairs. Duplicates appear once with all provenance; order is shuffled and
// every orientation decided by a fair coin, all from `seed`.
std::vector<BatchItem> BuildEvaluationBatch(
    std::span<const std::vector<SimplificationCandidate>> per_method,
    const TransformationDictionary *dictionary, size_t dictionary_sample, uint64_t seed);

void WriteBatchManifest(std::ostream &out, std::span<const BatchItem> batch);
std::vector<BatchItem> ReadBatchManifest(std::istream &in);

struct JudgmentRow {
  uint64_t pair_id = 0;
  std::string judge;
  RawLabel label = RawLabel::kUnsure;
};

// pair_id<TAB>judge_id<TAB>raw_label
std::vector<JudgmentRow> ReadJudgments(std::istream &in);
// judge_id<TAB>group
std::map<std::string, std::string> ReadJudgeGroups(std::istream &in);

// Joins manifest and judgments into one record per judged pair, keeping only
// judges accepted by `judge_filter` (all judges when empty).
std::map<uint64_t, AnnotationRecord> BuildRecords(std::span<const BatchItem> batch,
                                                  std::span<const JudgmentRow> rows,
                                                  const std::set<std::string> &judge_filter);

Judgments VerdictsFor(const std::map<uint64_t, AnnotationRecord> &records);

struct MethodReport {
  std::string method;
  size_t pairs = 0;  // length of the submitted list
  PrecisionResult precision;
  std::optional<OverlapResult> overlap;
};

struct EvalReport {
  size_t k = 0;
  std::string verdict_group;
  std::vector<MethodReport> methods;
  std::map<std::string, double> kappa;        // per judge group
  std::map<std::string, double> all_agree;    // share of items with unanimous labels
};

void WriteReportText(std::ostream &out, const EvalReport &report);
void WriteReportTsv(std::ostream &out, const EvalReport &report);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_EVAL_HPP_
