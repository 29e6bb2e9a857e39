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

#include "core/candidates_io.hpp"

#include <string>

namespace lexsimp {

void WriteCandidates(std::ostream &out, std::span<const SimplificationCandidate> ranked) {
  size_t rank = 0;
  for (const SimplificationCandidate &c : ranked) {
    out << ++rank << '\t' << c.source << '\t' << c.target << '\t'
        << FormatDouble(c.score) << '\t' << FormatDouble(c.detail) << "\tmethod="
        << MethodName(c.method) << '\n';
  }
}

std::vector<SimplificationCandidate> ReadCandidates(std::istream &in) {
  std::vector<SimplificationCandidate> out;
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::string where = "ranked line " + std::to_string(line_number);
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 6) ThrowData(where + ": expected 6 tab-separated fields");
    if (f[5].substr(0, 7) != "method=") ThrowData(where + ": missing method column");
    SimplificationCandidate c;
    ParseInt(f[0], where);
    c.source = std::string(f[1]);
    c.target = std::string(f[2]);
    c.score = ParseDouble(f[3], where);
    c.detail = ParseDouble(f[4], where);
    try {
      c.method = ParseMethod(f[5].substr(7));
    } catch (const Error &e) {
      ThrowData(where + ": " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lexsimp
