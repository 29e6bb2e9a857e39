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

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core/metadata_rank.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace lexsimp;
using lexsimp::testing::BrutePmi;
using lexsimp::testing::MakeInstance;
using lexsimp::testing::RandomPmiFixture;

TEST_CASE("glob matching") {
  CHECK(GlobMatch("*simpl*", "simplified"));
  CHECK(GlobMatch("*simpl*", "oversimplify"));
  CHECK(GlobMatch("s?mple", "sample"));
  CHECK_FALSE(GlobMatch("*simpl*", "sample"));
  CHECK_FALSE(GlobMatch("simpl", "simplify"));
  CHECK(GlobMatch("", ""));
  CHECK(GlobMatch("*", ""));
}

TEST_CASE("trusted comments are matched word by word, case-insensitively") {
  TrustedCommentMatcher matcher;
  CHECK(matcher.Matches(std::string("Simplified wording")));
  CHECK(matcher.Matches(std::string("/* History */ SIMPLIFY")));
  CHECK_FALSE(matcher.Matches(std::string("sim pl")));
  CHECK_FALSE(matcher.Matches(std::string("copyedit")));
  CHECK_FALSE(matcher.Matches(std::nullopt));

  TrustedCommentMatcher substring({"simpl"});
  CHECK(substring.Matches(std::string("oversimplification")));
  TrustedCommentMatcher several({"*easier*", "plain"});
  CHECK(several.Matches(std::string("made it easier")));
  CHECK(several.Matches(std::string("plainer words")));
  CHECK_FALSE(several.Matches(std::string("simplify")));
}

TEST_CASE("only instances from trusted revisions are selected") {
  std::vector<RevisionEdits> revs(3);
  revs[0].comment = "simplify";
  revs[0].instances = {MakeInstance("numerous", "many"), MakeInstance("assist", "help")};
  revs[1].comment = "typo";
  revs[1].instances = {MakeInstance("recieve", "receive")};
  revs[2].instances = {MakeInstance("utilize", "use")};
  auto trusted = SelectTrusted(revs, TrustedCommentMatcher());
  REQUIRE(trusted.size() == 2);
  CHECK(PhraseKey(trusted[0].source) == "numerous");
  CHECK(PhraseKey(trusted[1].source) == "assist");
}

TEST_CASE("PMI on a hand-sized multiset") {
  // (a,x) x2, (a,y) x1, (b,x) x1; N = 4.
  std::vector<LexicalEditInstance> inst = {MakeInstance("a", "x"), MakeInstance("a", "x"),
                                           MakeInstance("a", "y"), MakeInstance("b", "x")};
  auto ranked = PmiRank(inst);
  REQUIRE(ranked.size() == 3);
  // ratios: a->y 1*4/(3*1) = 4/3, b->x 1*4/(1*3) = 4/3, a->x 2*4/(3*3) = 8/9
  CHECK(ranked[0].source == "a");
  CHECK(ranked[0].target == "y");
  CHECK(ranked[1].source == "b");
  CHECK(ranked[2].target == "x");
  CHECK(ranked[0].score == doctest::Approx(std::log(4.0 / 3.0)));
  CHECK(ranked[2].score == doctest::Approx(std::log(8.0 / 9.0)));
  CHECK(ranked[2].detail == 2);
}

TEST_CASE("PMI order matches brute force on random fixtures") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    auto pairs = RandomPmiFixture(rng, 100);
    std::vector<LexicalEditInstance> inst;
    for (const auto &[a, b] : pairs) inst.push_back(MakeInstance(a, b));
    auto got = PmiRank(inst);
    auto want = BrutePmi(pairs);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].source == want[i].source);
      CHECK(got[i].target == want[i].target);
      CHECK(got[i].detail == static_cast<double>(want[i].count));
      CHECK(got[i].score == doctest::Approx(static_cast<double>(want[i].score)));
    }
  }
}

TEST_CASE("frequent baseline counts pairs") {
  std::vector<LexicalEditInstance> inst = {MakeInstance("b", "x"), MakeInstance("a", "x"),
                                           MakeInstance("b", "x"), MakeInstance("a", "y")};
  auto top = BaselineFrequent(inst, 2);
  REQUIRE(top.size() == 2);
  CHECK(top[0].source == "b");
  CHECK(top[0].detail == 2);
  CHECK(top[1].source == "a");
  CHECK(top[1].target == "x");
  CHECK(BaselineFrequent(inst, 10).size() == 3);
}

TEST_CASE("random baseline is seeded, distinct and complete") {
  std::vector<LexicalEditInstance> inst;
  for (int i = 0; i < 30; ++i) {
    inst.push_back(MakeInstance("s" + std::to_string(i % 10), "t" + std::to_string(i % 7)));
  }
  for (RandomSampling mode : {RandomSampling::kDistinct, RandomSampling::kWeighted}) {
    auto a = BaselineRandom(inst, 5, 42, mode);
    auto b = BaselineRandom(inst, 5, 42, mode);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].source == b[i].source);
      CHECK(a[i].target == b[i].target);
    }
    std::set<std::pair<std::string, std::string>> distinct;
    for (const auto &c : BaselineRandom(inst, 1000, 9, mode)) distinct.insert({c.source, c.target});
    CHECK(distinct.size() == BaselineFrequent(inst, 1000).size());
  }
  auto c = BaselineRandom(inst, 5, 43);
  auto d = BaselineRandom(inst, 5, 42);
  bool differs = false;
  for (size_t i = 0; i < c.size(); ++i) differs = differs || c[i].source != d[i].source;
  CHECK(differs);
}
