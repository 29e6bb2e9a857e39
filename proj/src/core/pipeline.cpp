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

#include "core/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <thread>

#include "core/candidates_io.hpp"
#include "core/instance_io.hpp"
#include "core/instance_store.hpp"

namespace lexsimp {
namespace {

constexpr size_t kBatchArticles = 512;

std::string Join(const std::string &dir, const std::string &name) {
  return (std::filesystem::path(dir) / name).string();
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. Index i goes to
// thread i % workers.
template <typename Fn>
void ParallelFor(size_t n, size_t workers, Fn fn) {
  workers = std::max<size_t>(1, std::min(workers, n));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (size_t i = w; i < n; i += workers) fn(i, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread &t : threads) t.join();
  for (std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<VersionSequence> ReadBatch(DumpReader &reader, size_t limit) {
  std::vector<VersionSequence> batch;
  while (batch.size() < limit) {
    std::optional<VersionSequence> seq = reader.Next();
    if (!seq) break;
    batch.push_back(std::move(*seq));
  }
  return batch;
}

PhraseVocabulary BuildVocabulary(const std::vector<CorpusInputs> &inputs, uint64_t *instances) {
  PhraseVocabulary vocabulary;
  for (const CorpusInputs &in : inputs) {
    InstanceReader reader = InstanceReader::Open(in.instances);
    while (std::optional<RevisionEdits> group = reader.Next()) {
      for (const LexicalEditInstance &inst : group->instances) {
        vocabulary.Add(inst.source);
        ++*instances;
      }
    }
  }
  return vocabulary;
}

void CheckOpenable(const std::string &path) { OpenInput(path); }

std::vector<SimplificationCandidate> LoadRanked(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return ReadCandidates(in);
}

}  // namespace

std::string SequencesPath(const std::string &workdir, Corpus corpus) {
  return Join(workdir, std::string(CorpusName(corpus)) + ".jsonl");
}

std::string InstancesPath(const std::string &workdir, Corpus corpus) {
  return Join(workdir, std::string(CorpusName(corpus)) + ".instances.jsonl");
}

std::string StorePath(const std::string &workdir) { return Join(workdir, "store.tsv"); }

std::string RankedPath(const std::string &workdir, Method method) {
  return Join(workdir, "ranked." + std::string(MethodName(method)) + ".tsv");
}

std::string TruthPath(const std::string &workdir) { return Join(workdir, "truth.tsv"); }

IngestStats RunIngest(const IngestRequest &request) {
  DumpReader reader =
      DumpReader::Open(request.input, request.corpus, request.format, request.strip_markup);
  std::ofstream out = OpenOutput(request.output);
  IngestStats stats;
  while (std::optional<VersionSequence> seq = reader.Next()) {
    VersionSequence kept = request.filter_textual ? FilterTextualChanges(std::move(*seq))
                                                  : std::move(*seq);
    stats.revisions_kept += kept.revisions.size();
    WriteSequenceJsonl(out, kept);
  }
  stats.dump = reader.stats();
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + request.output);
  return stats;
}

ExtractStats RunExtract(const ExtractRequest &request) {
  DumpReader reader =
      DumpReader::Open(request.sequences, request.corpus, DumpFormat::kJsonl, false);
  std::ofstream out = OpenOutput(request.output);
  ExtractStats stats;
  size_t batch_size = kBatchArticles * std::max<size_t>(1, request.workers);
  while (true) {
    std::vector<VersionSequence> batch = ReadBatch(reader, batch_size);
    if (batch.empty()) break;
    std::vector<std::vector<RevisionEdits>> results(batch.size());
    ParallelFor(batch.size(), request.workers, [&](size_t i, size_t) {
      results[i] = ExtractFromSequence(batch[i], request.config);
    });
    for (size_t i = 0; i < batch.size(); ++i) {
      ++stats.articles;
      stats.revisions += batch[i].revisions.size();
      for (const RevisionEdits &edits : results[i]) {
        ++stats.revisions_with_edits;
        stats.instances += edits.instances.size();
        WriteRevisionEdits(out, edits, request.corpus);
      }
    }
  }
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + request.output);
  return stats;
}

CountStats RunCount(const CountRequest &request) {
  if (request.inputs.empty()) ThrowUsage("count needs at least one corpus");
  for (const CorpusInputs &in : request.inputs) {
    CheckOpenable(in.sequences);
    CheckOpenable(in.instances);
  }
  CountStats stats;
  PhraseVocabulary vocabulary = BuildVocabulary(request.inputs, &stats.instances);
  stats.vocabulary = vocabulary.size();

  size_t workers = std::max<size_t>(1, request.workers);
  std::vector<EditInstanceStore> shards(workers);
  for (const CorpusInputs &in : request.inputs) {
    DumpReader reader = DumpReader::Open(in.sequences, in.corpus, DumpFormat::kJsonl, false);
    InstanceReader instances = InstanceReader::Open(in.instances);
    std::optional<RevisionEdits> pending = instances.Next();
    while (true) {
      std::vector<VersionSequence> batch = ReadBatch(reader, kBatchArticles * workers);
      if (batch.empty()) break;
      // Instances are written in sequence order, so a merge join pairs each
      // article with its groups.
      std::vector<std::vector<LexicalEditInstance>> edits(batch.size());
      for (size_t i = 0; i < batch.size(); ++i) {
        batch[i].corpus = in.corpus;
        while (pending && pending->article_id == batch[i].article_id) {
          for (LexicalEditInstance &inst : pending->instances) {
            edits[i].push_back(std::move(inst));
          }
          pending = instances.Next();
        }
      }
      ParallelFor(batch.size(), workers, [&](size_t i, size_t w) {
        shards[w].Accumulate(batch[i], edits[i], vocabulary);
      });
      stats.articles += batch.size();
    }
    if (pending) {
      ThrowData(in.instances + ": instances of article '" + pending->article_id +
                "' do not follow the article order of " + in.sequences);
    }
  }
  EditInstanceStore store;
  for (const EditInstanceStore &shard : shards) store.Merge(shard);
  store.Validate();
  std::ofstream out = OpenOutput(request.output);
  store.Save(out);
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + request.output);
  return stats;
}

std::vector<SimplificationCandidate> RankCandidates(const RankRequest &request,
                                                    RankStats *stats) {
  request.model.Validate();
  std::vector<SimplificationCandidate> ranked;
  uint64_t pool = 0;
  if (request.method == Method::kEditModel) {
    std::ifstream in = OpenInput(request.store);
    EditInstanceStore store = EditInstanceStore::Load(in);
    ranked = RankEditModel(store, request.model);
    pool = CountEligiblePhrases(store, request.model);
  } else {
    std::vector<RevisionEdits> groups = ReadAllRevisionEdits(request.instances);
    size_t k = request.model.top_k == 0 ? SIZE_MAX : request.model.top_k;
    if (request.method == Method::kSimpl) {
      std::vector<LexicalEditInstance> trusted =
          SelectTrusted(groups, TrustedCommentMatcher(request.seed_patterns));
      pool = trusted.size();
      ranked = PmiRank(trusted);
      if (ranked.size() > k) ranked.resize(k);
    } else {
      std::vector<LexicalEditInstance> all = Flatten(groups);
      pool = all.size();
      ranked = request.method == Method::kFrequent
                   ? BaselineFrequent(all, k)
                   : BaselineRandom(all, k, request.rng_seed, request.sampling);
    }
  }
  if (stats != nullptr) {
    stats->candidates = ranked.size();
    stats->pool = pool;
  }
  return ranked;
}

RankStats RunRank(const RankRequest &request) {
  RankStats stats;
  std::vector<SimplificationCandidate> ranked = RankCandidates(request, &stats);
  std::ofstream out = OpenOutput(request.output);
  WriteCandidates(out, ranked);
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + request.output);
  return stats;
}

SynthStats RunSynth(const SynthRequest &request) {
  GeneratedCorpora corpora = Generate(request.spec, request.workers);
  SynthStats stats;
  auto write = [&](const std::string &path, const std::vector<VersionSequence> &seqs) {
    std::ofstream out = OpenOutput(path);
    for (const VersionSequence &seq : seqs) {
      stats.revisions += seq.revisions.size();
      WriteSequenceJsonl(out, seq);
    }
    out.flush();
    if (!out) throw Error(ErrorKind::kIo, "failed writing " + path);
  };
  write(request.complex_output, corpora.complex);
  write(request.simple_output, corpora.simple);
  stats.complex_articles = corpora.complex.size();
  stats.simple_articles = corpora.simple.size();
  if (!request.truth_output.empty()) {
    std::ofstream out = OpenOutput(request.truth_output);
    WriteGroundTruth(out, request.spec);
  }
  return stats;
}

uint64_t RunEvalBatch(const EvalBatchRequest &request) {
  std::vector<std::vector<SimplificationCandidate>> lists;
  for (const std::string &path : request.ranked) {
    std::vector<SimplificationCandidate> list = LoadRanked(path);
    if (list.size() > request.k) list.resize(request.k);
    lists.push_back(std::move(list));
  }
  std::optional<TransformationDictionary> dictionary;
  if (!request.dictionary.empty()) {
    std::ifstream in = OpenInput(request.dictionary);
    dictionary = TransformationDictionary::Load(in);
  }
  std::vector<BatchItem> batch =
      BuildEvaluationBatch(lists, dictionary ? &*dictionary : nullptr,
                           request.dictionary_sample, request.rng_seed);
  std::ofstream out = OpenOutput(request.output);
  WriteBatchManifest(out, batch);
  return batch.size();
}

EvalReport BuildEvalReport(const EvalReportRequest &request) {
  std::vector<BatchItem> batch;
  {
    std::ifstream in = OpenInput(request.manifest);
    batch = ReadBatchManifest(in);
  }
  std::vector<JudgmentRow> rows;
  {
    std::ifstream in = OpenInput(request.judgments);
    rows = ReadJudgments(in);
  }
  std::map<std::string, std::string> groups;
  if (!request.judges.empty()) {
    std::ifstream in = OpenInput(request.judges);
    groups = ReadJudgeGroups(in);
  }
  std::map<std::string, std::set<std::string>> members;
  for (const auto &[judge, group] : groups) members[group].insert(judge);

  EvalReport report;
  report.k = request.k;
  std::set<std::string> verdict_judges;
  if (members.count(request.verdict_group)) {
    report.verdict_group = request.verdict_group;
    verdict_judges = members[request.verdict_group];
  }
  Judgments judgments = VerdictsFor(BuildRecords(batch, rows, verdict_judges));

  std::optional<TransformationDictionary> dictionary;
  if (!request.dictionary.empty()) {
    std::ifstream in = OpenInput(request.dictionary);
    dictionary = TransformationDictionary::Load(in);
  }

  for (const std::string &path : request.ranked) {
    std::vector<SimplificationCandidate> list = LoadRanked(path);
    MethodReport m;
    m.method = list.empty() ? std::filesystem::path(path).stem().string()
                            : std::string(MethodName(list.front().method));
    m.pairs = list.size();
    m.precision = PrecisionAtK(list, judgments, request.k, request.denominator);
    if (dictionary) {
      std::span<const SimplificationCandidate> top(list.data(),
                                                   std::min(list.size(), request.k));
      m.overlap = DictionaryOverlap(top, *dictionary, judgments);
    }
    report.methods.push_back(std::move(m));
  }

  if (members.empty()) members["all"] = {};
  for (const auto &[group, judges] : members) {
    std::map<uint64_t, AnnotationRecord> records = BuildRecords(batch, rows, judges);
    std::vector<std::vector<CollapsedLabel>> items;
    size_t unanimous = 0;
    for (const auto &[id, record] : records) {
      std::vector<CollapsedLabel> labels;
      for (RawLabel label : record.labels) {
        labels.push_back(CollapseLabel(label, record.orientation));
      }
      if (std::all_of(labels.begin(), labels.end(),
                      [&](CollapsedLabel l) { return l == labels.front(); })) {
        ++unanimous;
      }
      items.push_back(std::move(labels));
    }
    if (items.empty() || items.front().size() < 2) continue;
    try {
      report.kappa[group] = FleissKappa(std::span<const std::vector<CollapsedLabel>>(items));
    } catch (const Error &e) {
      ThrowData("judge group '" + group + "': " + e.what());
    }
    report.all_agree[group] = static_cast<double>(unanimous) / static_cast<double>(items.size());
  }
  return report;
}

EvalReport RunEvalReport(const EvalReportRequest &request) {
  EvalReport report = BuildEvalReport(request);
  if (!request.text_output.empty()) {
    std::ofstream out = OpenOutput(request.text_output);
    WriteReportText(out, report);
  }
  if (!request.tsv_output.empty()) {
    std::ofstream out = OpenOutput(request.tsv_output);
    WriteReportTsv(out, report);
  }
  return report;
}

}  // namespace lexsimp
