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

#ifndef LEXSIMP_CORE_INSTANCE_IO_HPP_
#define LEXSIMP_CORE_INSTANCE_IO_HPP_

#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

// Edit instances travel between stages as JSONL, one instance per line:
//   {"corpus":..,"article_id":..,"revision_index":..,"comment":..,"A":..,"a":..}
// A and a are the phrase tokens joined by single spaces.
void WriteRevisionEdits(std::ostream &out, const RevisionEdits &edits,
                        Corpus corpus);

// Reads instance lines back, regrouping consecutive lines that share
// (article_id, revision_index).
class InstanceReader {
 public:
  explicit InstanceReader(std::unique_ptr<std::istream> input);
  static InstanceReader Open(const std::string &path);

  std::optional<RevisionEdits> Next();

 private:
  std::optional<LexicalEditInstance> ReadLine(std::optional<std::string> *comment);

  std::unique_ptr<std::istream> input_;
  std::optional<RevisionEdits> pending_;
  uint64_t line_number_ = 0;
};

std::vector<RevisionEdits> ReadAllRevisionEdits(const std::string &path);

// Flattens grouped edits into the instance multiset.
std::vector<LexicalEditInstance> Flatten(const std::vector<RevisionEdits> &groups);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_INSTANCE_IO_HPP_
