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

#ifndef LEXSIMP_CORE_COMMON_HPP_
#define LEXSIMP_CORE_COMMON_HPP_

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexsimp {

// Failure categories. The C API and the CLI map these onto status codes and
// process exit codes.
enum class ErrorKind {
  kUsage,         // bad argument or configuration value
  kData,          // malformed or inconsistent input data
  kIo,            // file could not be read or written
  kMissingInput,  // an expected upstream artifact does not exist
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void ThrowUsage(const std::string &message);
[[noreturn]] void ThrowData(const std::string &message);

enum class Corpus { kComplex, kSimple };

std::string_view CorpusName(Corpus corpus);
Corpus ParseCorpus(std::string_view name);

// A phrase is a short token sequence. Keys used for counting are the
// lowercased tokens joined by single spaces.
using Phrase = std::vector<std::string>;

std::string JoinTokens(const Phrase &tokens);
Phrase SplitOnSpaces(std::string_view text);
std::string PhraseKey(const Phrase &tokens);

std::string AsciiLower(std::string_view text);

struct Revision {
  std::string article_id;
  int64_t revision_index = 0;  // position after ingestion, 0..n-1
  int64_t source_index = 0;    // position in the original history
  std::optional<std::string> comment;
  std::string text;
  std::optional<std::string> timestamp;
};

struct VersionSequence {
  std::string article_id;
  std::string title;
  Corpus corpus = Corpus::kSimple;
  std::vector<Revision> revisions;
};

// One extracted rewrite A -> a. Tokens keep the case they had in the text.
struct LexicalEditInstance {
  Phrase source;
  Phrase target;
  std::string article_id;
  int64_t revision_index = 0;
  Corpus corpus = Corpus::kSimple;
};

// The instances extracted from one revision step, together with the comment
// the editor attached to the newer revision.
struct RevisionEdits {
  std::string article_id;
  int64_t revision_index = 0;
  std::optional<std::string> comment;
  std::vector<LexicalEditInstance> instances;
};

enum class Method { kEditModel, kSimpl, kFrequent, kRandom };

std::string_view MethodName(Method method);
Method ParseMethod(std::string_view name);

struct SimplificationCandidate {
  std::string source;  // normalized phrase key of A
  std::string target;  // normalized phrase key of a
  double score = 0.0;
  // Method-specific second value: the clamped simplify conditional for the
  // edit model, the pair count for the instance-based methods.
  double detail = 0.0;
  Method method = Method::kEditModel;
};

// Shortest decimal form that round-trips to the same double.
std::string FormatDouble(double value);

std::vector<std::string_view> SplitTabs(std::string_view line);
int64_t ParseInt(std::string_view text, std::string_view what);
uint64_t ParseUnsigned(std::string_view text, std::string_view what);
double ParseDouble(std::string_view text, std::string_view what);

// Opens a file for reading. A missing file raises kMissingInput naming the
// path.
std::ifstream OpenInput(const std::string &path);
std::ofstream OpenOutput(const std::string &path);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_COMMON_HPP_
