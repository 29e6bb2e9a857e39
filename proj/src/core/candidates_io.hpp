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

#ifndef LEXSIMP_CORE_CANDIDATES_IO_HPP_
#define LEXSIMP_CORE_CANDIDATES_IO_HPP_

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "core/common.hpp"

namespace lexsimp {

// Ranked candidate TSV, one line per candidate, rank starting at 1:
//   rank  A  a  score  detail  method=<name>
// For the edit model score is P(simplify|A) and detail the clamped
// P(a|A, simplify); for the other methods detail is the pair count.
void WriteCandidates(std::ostream &out, std::span<const SimplificationCandidate> ranked);
std::vector<SimplificationCandidate> ReadCandidates(std::istream &in);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_CANDIDATES_IO_HPP_
