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

#ifndef LEXSIMP_CORE_TOKENIZE_HPP_
#define LEXSIMP_CORE_TOKENIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

struct Sentence {
  std::vector<std::string> tokens;  // original case
  std::vector<std::string> lower;   // lowercased copy used for comparison
};

// Splits on whitespace and separates leading and trailing ASCII punctuation
// into single-character tokens. Word-internal punctuation stays ("don't").
std::vector<std::string> Tokenize(std::string_view text);

// Segments text into sentences. A sentence ends at a line break, or after a
// word ending in '.', '!' or '?' when the next word starts with a capital
// letter or the line ends. Common abbreviations and single-letter initials do
// not end a sentence. Concatenating the token lists of all sentences gives
// Tokenize(text).
std::vector<Sentence> SplitSentences(std::string_view text);

Sentence MakeSentence(std::vector<std::string> tokens);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_TOKENIZE_HPP_
