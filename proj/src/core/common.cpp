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

#include "core/common.hpp"

#include <charconv>
#include <filesystem>
#include <system_error>

namespace lexsimp {

void ThrowUsage(const std::string &message) {
  throw Error(ErrorKind::kUsage, message);
}

void ThrowData(const std::string &message) {
  throw Error(ErrorKind::kData, message);
}

std::string_view CorpusName(Corpus corpus) {
  return corpus == Corpus::kComplex ? "complex" : "simple";
}

Corpus ParseCorpus(std::string_view name) {
  std::string lower = AsciiLower(name);
  if (lower == "complex") return Corpus::kComplex;
  if (lower == "simple") return Corpus::kSimple;
  ThrowUsage("unknown corpus '" + std::string(name) +
             "' (expected complex or simple)");
}

std::string JoinTokens(const Phrase &tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

Phrase SplitOnSpaces(std::string_view text) {
  Phrase tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    size_t end = pos;
    while (end < text.size() && text[end] != ' ') ++end;
    if (end > pos) tokens.emplace_back(text.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::string PhraseKey(const Phrase &tokens) {
  return AsciiLower(JoinTokens(tokens));
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kEditModel: return "edit_model";
    case Method::kSimpl: return "simpl";
    case Method::kFrequent: return "frequent";
    case Method::kRandom: return "random";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  std::string key = AsciiLower(name);
  for (char &c : key) {
    if (c == '-') c = '_';
  }
  if (key == "edit_model") return Method::kEditModel;
  if (key == "simpl") return Method::kSimpl;
  if (key == "frequent") return Method::kFrequent;
  if (key == "random") return Method::kRandom;
  ThrowUsage("unknown method '" + std::string(name) +
             "' (expected edit-model, simpl, frequent or random)");
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

int64_t ParseInt(std::string_view text, std::string_view what) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    ThrowData("invalid integer for " + std::string(what) + ": '" +
              std::string(text) + "'");
  }
  return value;
}

uint64_t ParseUnsigned(std::string_view text, std::string_view what) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    ThrowData("invalid count for " + std::string(what) + ": '" +
              std::string(text) + "'");
  }
  return value;
}

double ParseDouble(std::string_view text, std::string_view what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    ThrowData("invalid number for " + std::string(what) + ": '" +
              std::string(text) + "'");
  }
  return value;
}

std::ifstream OpenInput(const std::string &path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw Error(ErrorKind::kMissingInput, "missing input: expected " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return in;
}

std::ofstream OpenOutput(const std::string &path) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  return out;
}

}  // namespace lexsimp
