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

#ifndef LEXSIMP_CORE_DUMP_READER_HPP_
#define LEXSIMP_CORE_DUMP_READER_HPP_

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

enum class DumpFormat { kAuto, kMediaWikiXml, kJsonl };

struct DumpStats {
  uint64_t pages_seen = 0;
  uint64_t pages_emitted = 0;  // returned by Next() so far
  uint64_t pages_skipped = 0;  // page elements without any revision
  uint64_t revisions = 0;
};

// Pull-style reader producing one VersionSequence per page. Input is consumed
// in fixed-size chunks, so memory stays proportional to the largest page.
//
// Accepts a MediaWiki XML export (pages-meta-history) or the line-delimited
// fixture format: one JSON object per revision with fields article_id, title,
// index, comment and text, grouped by consecutive article_id. Revisions are
// taken in file order and numbered 0..n-1. Malformed input raises a kData
// error naming the byte offset.
class DumpReader {
 public:
  DumpReader(std::unique_ptr<std::istream> input, Corpus corpus,
             DumpFormat format = DumpFormat::kAuto, bool strip_markup = true);
  DumpReader(DumpReader &&other) noexcept;
  DumpReader &operator=(DumpReader &&other) noexcept;
  ~DumpReader();

  static DumpReader Open(const std::string &path, Corpus corpus,
                         DumpFormat format = DumpFormat::kAuto,
                         bool strip_markup = true);

  std::optional<VersionSequence> Next();

  const DumpStats &stats() const;
  DumpFormat format() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

// Reads a whole dump from a string. Intended for tests and small inputs.
std::vector<VersionSequence> ParseDump(const std::string &data, Corpus corpus,
                                       DumpFormat format = DumpFormat::kAuto,
                                       DumpStats *stats = nullptr);

// Drops every revision whose text equals the text of the previous surviving
// revision. The first revision always survives; survivors are renumbered
// 0..m-1 and keep their original position in source_index.
VersionSequence FilterTextualChanges(VersionSequence sequence);

// Writes the sequence in the fixture format, one line per revision.
void WriteSequenceJsonl(std::ostream &out, const VersionSequence &sequence);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_DUMP_READER_HPP_
