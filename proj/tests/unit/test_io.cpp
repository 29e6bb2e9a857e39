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

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "core/candidates_io.hpp"
#include "core/common.hpp"
#include "core/instance_io.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace lexsimp;

TEST_CASE("doubles print in shortest round-trip form") {
  for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 77.0 / 99.0, 1e-300, 12345678.9}) {
    CHECK(std::stod(FormatDouble(v)) == v);
  }
  CHECK(FormatDouble(0.5) == "0.5");
}

TEST_CASE("numeric parsers reject trailing garbage") {
  CHECK(ParseUnsigned("42", "n") == 42);
  CHECK(ParseInt("-3", "n") == -3);
  CHECK(ParseDouble("0.25", "x") == 0.25);
  CHECK_THROWS_AS(ParseUnsigned("42x", "n"), Error);
  CHECK_THROWS_AS(ParseUnsigned("-1", "n"), Error);
  CHECK_THROWS_AS(ParseDouble("", "x"), Error);
}

TEST_CASE("phrase keys lowercase and join with single spaces") {
  CHECK(PhraseKey({"Every", "YEAR"}) == "every year");
  CHECK(SplitOnSpaces("  a  b ") == Phrase{"a", "b"});
}

TEST_CASE("instance files regroup by revision") {
  RevisionEdits first;
  first.article_id = "a1";
  first.revision_index = 3;
  first.comment = "simplify \"quoted\"\twith tab";
  first.instances = {testing::MakeInstance("Numerous", "many", "a1", 3),
                     testing::MakeInstance("annually", "every year", "a1", 3)};
  RevisionEdits second;
  second.article_id = "a1";
  second.revision_index = 4;
  second.instances = {testing::MakeInstance("assist", "help", "a1", 4)};

  std::ostringstream out;
  WriteRevisionEdits(out, first, Corpus::kSimple);
  WriteRevisionEdits(out, second, Corpus::kSimple);
  InstanceReader reader(std::make_unique<std::istringstream>(out.str()));
  auto g1 = reader.Next();
  auto g2 = reader.Next();
  REQUIRE(g1);
  REQUIRE(g2);
  CHECK_FALSE(reader.Next());
  CHECK(g1->comment == first.comment);
  REQUIRE(g1->instances.size() == 2);
  CHECK(g1->instances[0].source == Phrase{"Numerous"});
  CHECK(g1->instances[1].target == Phrase{"every", "year"});
  CHECK_FALSE(g2->comment.has_value());
  CHECK(g2->revision_index == 4);
  CHECK(Flatten({*g1, *g2}).size() == 3);
}

TEST_CASE("candidate TSV round-trips exactly") {
  std::vector<SimplificationCandidate> ranked = {
      {"annually", "every year", 0.6, 0.75, Method::kEditModel},
      {"assist", "help", 1.0 / 3.0, 2, Method::kEditModel}};
  std::ostringstream out;
  WriteCandidates(out, ranked);
  CHECK(out.str().rfind("1\tannually\tevery year\t0.6\t0.75\tmethod=edit_model\n", 0) == 0);
  std::istringstream in(out.str());
  auto back = ReadCandidates(in);
  REQUIRE(back.size() == 2);
  CHECK(back[1].score == ranked[1].score);
  CHECK(back[1].target == "help");
  CHECK(back[1].method == Method::kEditModel);
}

TEST_CASE("method names parse in both spellings") {
  CHECK(ParseMethod("edit-model") == Method::kEditModel);
  CHECK(ParseMethod("edit_model") == Method::kEditModel);
  CHECK(MethodName(Method::kSimpl) == "simpl");
  CHECK_THROWS_AS(ParseMethod("oracle"), Error);
  CHECK(ParseCorpus("complex") == Corpus::kComplex);
  CHECK_THROWS_AS(ParseCorpus("medium"), Error);
}
