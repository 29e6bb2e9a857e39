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

#include "core/markup.hpp"

#include <vector>

#include "core/common.hpp"

namespace lexsimp {
namespace {

bool StartsWith(std::string_view text, size_t pos, std::string_view prefix) {
  return text.substr(pos, prefix.size()) == prefix;
}

bool IsAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Case-insensitive search for `needle` (already lowercase) from `pos`.
size_t FindNoCase(std::string_view text, std::string_view needle, size_t pos) {
  if (needle.size() > text.size()) return std::string_view::npos;
  for (size_t i = pos; i + needle.size() <= text.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < needle.size(); ++j) {
      char c = text[i + j];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c != needle[j]) {
        match = false;
        break;
      }
    }
    if (match) return i;
  }
  return std::string_view::npos;
}

// Skips a run of balanced {{...}} and {|...|} starting at `pos`. Returns the
// position after the construct, or the end of the text if it never closes.
size_t SkipBraces(std::string_view text, size_t pos) {
  std::vector<char> stack;
  while (pos < text.size()) {
    if (StartsWith(text, pos, "{{")) {
      stack.push_back('t');
      pos += 2;
    } else if (StartsWith(text, pos, "{|")) {
      stack.push_back('b');
      pos += 2;
    } else if (!stack.empty() && stack.back() == 't' &&
               StartsWith(text, pos, "}}")) {
      stack.pop_back();
      pos += 2;
    } else if (!stack.empty() && stack.back() == 'b' &&
               StartsWith(text, pos, "|}")) {
      stack.pop_back();
      pos += 2;
    } else {
      ++pos;
    }
    if (stack.empty()) return pos;
  }
  return text.size();
}

// Finds the "]]" closing the link opened at `pos` (which points at "[[").
size_t FindLinkEnd(std::string_view text, size_t pos) {
  int depth = 0;
  while (pos + 1 < text.size()) {
    if (StartsWith(text, pos, "[[")) {
      ++depth;
      pos += 2;
    } else if (StartsWith(text, pos, "]]")) {
      if (--depth == 0) return pos;
      pos += 2;
    } else {
      ++pos;
    }
  }
  return std::string_view::npos;
}

// Visible text of an internal link body (the part between [[ and ]]).
std::string LinkText(std::string_view body) {
  // Split at top-level pipes and colons.
  int depth = 0;
  size_t last_pipe = std::string_view::npos;
  size_t first_pipe = std::string_view::npos;
  for (size_t i = 0; i < body.size(); ++i) {
    if (StartsWith(body, i, "[[")) {
      ++depth;
      ++i;
    } else if (StartsWith(body, i, "]]")) {
      --depth;
      ++i;
    } else if (body[i] == '|' && depth == 0) {
      if (first_pipe == std::string_view::npos) first_pipe = i;
      last_pipe = i;
    }
  }
  std::string_view target = body.substr(0, first_pipe);
  size_t colon = target.find(':');
  if (colon != std::string_view::npos && colon > 0) {
    std::string ns = AsciiLower(target.substr(0, colon));
    while (!ns.empty() && ns.front() == ' ') ns.erase(ns.begin());
    if (ns == "file" || ns == "image" || ns == "category" || ns == "media") {
      return "";
    }
    // Interwiki and other namespaced links without a label carry no prose.
    if (last_pipe == std::string_view::npos) return "";
  }
  if (last_pipe != std::string_view::npos) {
    return std::string(body.substr(last_pipe + 1));
  }
  if (!target.empty() && target.front() == ':') target.remove_prefix(1);
  return std::string(target);
}

// Removes inline markup in one left-to-right scan.
std::string StripInline(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '<' && StartsWith(text, i, "<!--")) {
      size_t end = text.find("-->", i + 4);
      i = end == std::string_view::npos ? text.size() : end + 3;
    } else if (c == '{' && (StartsWith(text, i, "{{") || StartsWith(text, i, "{|"))) {
      i = SkipBraces(text, i);
    } else if (c == '[' && StartsWith(text, i, "[[")) {
      size_t end = FindLinkEnd(text, i);
      if (end == std::string_view::npos) {
        i += 2;  // unterminated link: drop the brackets
      } else {
        out += LinkText(text.substr(i + 2, end - i - 2));
        i = end + 2;
      }
    } else if (c == '[' && (StartsWith(text, i, "[http") ||
                            StartsWith(text, i, "[ftp") ||
                            StartsWith(text, i, "[//"))) {
      size_t end = text.find(']', i);
      size_t newline = text.find('\n', i);
      if (end == std::string_view::npos || newline < end) {
        out.push_back(c);
        ++i;
      } else {
        std::string_view body = text.substr(i + 1, end - i - 1);
        size_t space = body.find(' ');
        if (space != std::string_view::npos) out += body.substr(space + 1);
        i = end + 1;
      }
    } else if (c == '<' && i + 1 < text.size() &&
               (IsAlpha(text[i + 1]) ||
                (text[i + 1] == '/' && i + 2 < text.size() &&
                 IsAlpha(text[i + 2])))) {
      size_t close = i + 1;
      while (close < text.size() && text[close] != '>' && text[close] != '<' &&
             text[close] != '\n') {
        ++close;
      }
      if (close >= text.size() || text[close] != '>') {
        out.push_back(c);
        ++i;
        continue;
      }
      size_t name_start = text[i + 1] == '/' ? i + 2 : i + 1;
      size_t name_end = name_start;
      while (name_end < close && IsAlpha(text[name_end])) ++name_end;
      std::string name = AsciiLower(text.substr(name_start, name_end - name_start));
      bool opening = text[i + 1] != '/';
      bool self_closing = text[close - 1] == '/';
      i = close + 1;
      if (opening && !self_closing && (name == "ref" || name == "gallery")) {
        std::string closing = "</" + name;
        size_t end = FindNoCase(text, closing, i);
        if (end == std::string_view::npos) {
          i = text.size();
        } else {
          size_t gt = text.find('>', end);
          i = gt == std::string_view::npos ? text.size() : gt + 1;
        }
      }
    } else if (c == '\'' && StartsWith(text, i, "''")) {
      while (i < text.size() && text[i] == '\'') ++i;
    } else if (c == '_' && StartsWith(text, i, "__")) {
      size_t j = i + 2;
      while (j < text.size() && text[j] >= 'A' && text[j] <= 'Z') ++j;
      if (j > i + 2 && StartsWith(text, j, "__")) {
        i = j + 2;
      } else {
        out.push_back(c);
        ++i;
      }
    } else if (c == '&' && StartsWith(text, i, "&nbsp;")) {
      out.push_back(' ');
      i += 6;
    } else {
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

// Drops heading and list markers, collapses blanks, removes empty lines.
std::string NormalizeLines(std::string_view text) {
  std::string out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;

    auto is_blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!line.empty() && is_blank(line.front())) line.remove_prefix(1);
    while (!line.empty() && is_blank(line.back())) line.remove_suffix(1);
    if (!line.empty() && line.front() == '=') {
      while (!line.empty() && line.front() == '=') line.remove_prefix(1);
      while (!line.empty() && line.back() == '=') line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == '*' || line.front() == '#' ||
                             line.front() == ':' || line.front() == ';')) {
      line.remove_prefix(1);
    }

    std::string collapsed;
    bool pending_space = false;
    for (char c : line) {
      if (is_blank(c)) {
        pending_space = true;
        continue;
      }
      if (pending_space && !collapsed.empty()) collapsed.push_back(' ');
      pending_space = false;
      collapsed.push_back(c);
    }
    if (collapsed.empty()) continue;
    if (!out.empty()) out.push_back('\n');
    out += collapsed;
  }
  return out;
}

}  // namespace

std::string StripMarkup(std::string_view wikitext) {
  // Every rule either leaves the text alone or shortens it, so iterating to
  // a fixed point terminates and makes the function idempotent.
  std::string current = NormalizeLines(StripInline(wikitext));
  for (int round = 0; round < 64; ++round) {
    std::string next = NormalizeLines(StripInline(current));
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace lexsimp
