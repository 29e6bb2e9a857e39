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

#include "core/tokenize.hpp"

#include <array>
#include <cctype>

namespace lexsimp {
namespace {

bool IsPunct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

constexpr std::array<std::string_view, 44> kAbbreviations = {
    "mr",   "mrs",  "ms",    "dr",   "prof", "st",  "jr",  "sr",  "vs",
    "e.g",  "i.e",  "inc",   "ltd",  "co",   "no",  "mt",  "ft",  "jan",
    "feb",  "mar",  "apr",   "jun",  "jul",  "aug", "sep", "sept", "oct",
    "nov",  "dec",  "u.s",   "u.k",  "gen",  "gov", "sen", "rep", "capt",
    "lt",   "col",  "sgt",   "approx", "ca", "fig", "vol", "cf"};

void AppendChunkTokens(std::string_view chunk, std::vector<std::string> *out) {
  size_t begin = 0;
  size_t end = chunk.size();
  while (begin < end && IsPunct(chunk[begin])) {
    out->emplace_back(1, chunk[begin]);
    ++begin;
  }
  size_t core_end = end;
  while (core_end > begin && IsPunct(chunk[core_end - 1])) --core_end;
  if (core_end > begin) out->emplace_back(chunk.substr(begin, core_end - begin));
  for (size_t i = core_end; i < end; ++i) out->emplace_back(1, chunk[i]);
}

// Core of a chunk with leading and trailing punctuation removed.
std::string_view ChunkCore(std::string_view chunk) {
  while (!chunk.empty() && IsPunct(chunk.front())) chunk.remove_prefix(1);
  while (!chunk.empty() && IsPunct(chunk.back())) chunk.remove_suffix(1);
  return chunk;
}

bool EndsSentence(std::string_view chunk) {
  // Look through closing quotes and brackets for a terminator.
  size_t i = chunk.size();
  while (i > 0 && (chunk[i - 1] == '"' || chunk[i - 1] == '\'' ||
                   chunk[i - 1] == ')' || chunk[i - 1] == ']')) {
    --i;
  }
  if (i == 0) return false;
  char term = chunk[i - 1];
  if (term != '.' && term != '!' && term != '?') return false;
  if (term == '.') {
    std::string core = AsciiLower(ChunkCore(chunk.substr(0, i)));
    if (core.size() == 1 && std::isalpha(static_cast<unsigned char>(core[0]))) {
      return false;  // initial such as "J."
    }
    for (std::string_view abbr : kAbbreviations) {
      if (core == abbr) return false;
    }
  }
  return true;
}

bool StartsCapitalized(std::string_view chunk) {
  for (char c : chunk) {
    if (IsPunct(c)) continue;
    return c >= 'A' && c <= 'Z';
  }
  return false;
}

std::vector<std::string_view> Chunks(std::string_view line) {
  std::vector<std::string_view> chunks;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && IsSpace(line[pos])) ++pos;
    size_t end = pos;
    while (end < line.size() && !IsSpace(line[end])) ++end;
    if (end > pos) chunks.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return chunks;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  for (std::string_view chunk : Chunks(text)) AppendChunkTokens(chunk, &tokens);
  return tokens;
}

Sentence MakeSentence(std::vector<std::string> tokens) {
  Sentence sentence;
  sentence.lower.reserve(tokens.size());
  for (const std::string &token : tokens) sentence.lower.push_back(AsciiLower(token));
  sentence.tokens = std::move(tokens);
  return sentence;
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  std::vector<Sentence> sentences;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t newline = text.find('\n', pos);
    if (newline == std::string_view::npos) newline = text.size();
    std::vector<std::string_view> chunks = Chunks(text.substr(pos, newline - pos));
    pos = newline + 1;

    std::vector<std::string> current;
    for (size_t i = 0; i < chunks.size(); ++i) {
      AppendChunkTokens(chunks[i], &current);
      bool last = i + 1 == chunks.size();
      if (last || (EndsSentence(chunks[i]) && StartsCapitalized(chunks[i + 1]))) {
        if (!current.empty()) sentences.push_back(MakeSentence(std::move(current)));
        current.clear();
      }
    }
  }
  return sentences;
}

}  // namespace lexsimp
