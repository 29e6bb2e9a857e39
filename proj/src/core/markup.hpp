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

#ifndef LEXSIMP_CORE_MARKUP_HPP_
#define LEXSIMP_CORE_MARKUP_HPP_

#include <string>
#include <string_view>

namespace lexsimp {

// Reduces wikitext to running prose. Removes comments, templates, tables,
// HTML tags (and the bodies of <ref> and <gallery> elements), file, image and
// category links, quote ticks, heading markers and list markers; replaces
// [[X|Y]] with Y and [[X]] with X; collapses whitespace. The result is a
// fixed point: StripMarkup(StripMarkup(x)) == StripMarkup(x).
std::string StripMarkup(std::string_view wikitext);

}  // namespace lexsimp

#endif  // LEXSIMP_CORE_MARKUP_HPP_
