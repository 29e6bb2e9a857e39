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

#include <random>
#include <string>
#include <vector>

#include "core/tokenize.hpp"
#include "doctest.h"

using lexsimp::SplitSentences;
using lexsimp::Tokenize;

TEST_CASE("punctuation separates from words at the edges only") {
  std::vector<std::string> expected = {"\"", "Don't", "stop", ",", "she", "said", ".", "\""};
  CHECK(Tokenize("\"Don't stop, she said.\"") == expected);
}

TEST_CASE("sentences end at line breaks and terminal punctuation") {
  auto sentences = SplitSentences("The river is long. It flows north!\nA new line starts here");
  REQUIRE(sentences.size() == 3);
  CHECK(sentences[0].tokens.back() == ".");
  CHECK(sentences[1].tokens.front() == "It");
  CHECK(sentences[2].tokens.front() == "A");
}

TEST_CASE("abbreviations and initials do not end a sentence") {
  auto sentences = SplitSentences("Dr. Smith met J. R. Tolkien in 1950. They talked.");
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[1].tokens.front() == "They");
}

TEST_CASE("lowercase copies mirror the tokens") {
  auto sentences = SplitSentences("The Nile Flows NORTH.");
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].lower == std::vector<std::string>{"the", "nile", "flows", "north", "."});
}

TEST_CASE("sentence tokens concatenate to the tokenized text") {
  const char *words[] = {"The", "river", "flows.", "Dr.", "Smith", "said", "so!", "Then",
                         "nothing", "\n", "e.g.", "A.", "is", "it?", "\"Yes,\"", "(often)"};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<size_t> pick(0, std::size(words) - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text;
    for (int i = 0; i < 25; ++i) {
      text += words[pick(rng)];
      text += ' ';
    }
    std::vector<std::string> joined;
    for (const auto &s : SplitSentences(text)) {
      CHECK_FALSE(s.tokens.empty());
      joined.insert(joined.end(), s.tokens.begin(), s.tokens.end());
    }
    CAPTURE(text);
    CHECK(joined == Tokenize(text));
  }
}
