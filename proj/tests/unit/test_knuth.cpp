// Copyright 2026 The matchsym Authors.
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

#include <algorithm>
#include <map>

#include "doctest.h"
#include "matchsym/bijection.hpp"
#include "matchsym/knuth.hpp"

using namespace matchsym;

namespace {

std::vector<std::string> strings(const std::vector<Matching>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("elementary move examples") {
  CHECK(strings(elementary_moves(Matching::parse("{(1,2),(3)}"))) ==
        std::vector<std::string>{"{(1),(2,3)}"});
  const auto ladder = strings(elementary_moves(Matching::parse("{(1,2),(3,4)}")));
  CHECK(std::find(ladder.begin(), ladder.end(), "{(1,4),(2,3)}") !=
        ladder.end());
  CHECK(elementary_moves(Matching::parse("{(1,3),(2,4)}")).empty());
  for (const auto& mv : moves(Matching::parse("{(1,2),(3)}"))) {
    CHECK(mv.kind == MoveKind::kChordSingleton);
  }
}

TEST_CASE("moves are symmetric and preserve size and core") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      const Matching c = core(m);
      for (const auto& next : elementary_moves(m)) {
        CHECK(next.n() == m.n());
        CHECK(next.num_singletons() == m.num_singletons());
        CHECK(core(next) == c);
        const auto back = elementary_moves(next);
        CHECK(std::find(back.begin(), back.end(), m) != back.end());
      }
    }
  }
}

TEST_CASE("class examples") {
  const Matching m = Matching::parse("{(1,2),(3,5),(4)}");
  REQUIRE(core(m).to_string() == "{(1,3),(2)}");
  const auto cls = equivalence_class(m);
  CHECK(cls.size() == 4);
  CHECK(cls.size() == hook_length_count(Partition({4, 1})));
  const Matching solo = Matching::parse("{(1,3),(2,4)}");
  CHECK(equivalence_class(solo) == std::vector<Matching>{solo});
  const auto classes = equivalence_classes(4, 0);
  REQUIRE(classes.size() == 2);
  std::vector<std::vector<std::string>> names;
  for (const auto& c : classes) names.push_back(strings(c));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::vector<std::string>>{
                     {"{(1,2),(3,4)}", "{(1,4),(2,3)}"}, {"{(1,3),(2,4)}"}});
}

TEST_CASE("classes are core fibers") {
  for (int n = 0; n <= 9; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      std::map<std::string, std::size_t> fiber_size;
      for_each_matching(n, f, [&](const Matching& m) {
        ++fiber_size[core(m).to_string()];
      });
      const auto classes = equivalence_classes(n, f);
      CHECK(classes.size() == fiber_size.size());
      std::size_t total = 0;
      for (const auto& cls : classes) {
        const Matching c = core(cls.front());
        for (const auto& m : cls) CHECK(core(m) == c);
        CHECK(cls.size() == fiber_size[c.to_string()]);
        const int k = (n - c.n()) / 2;
        CHECK(cls.size() == hook_length_count(Partition::two_row(n, k)));
        CHECK(is_closed_under_moves(cls));
        total += cls.size();
      }
      CHECK(total == count_matchings(n, f));
    }
  }
}

TEST_CASE("short chord insertion") {
  const Matching m = Matching::parse("{(1,3),(2,6),(4,5)}");
  CHECK(insert_short_chord(m, 3).to_string() == "{(1,5),(2,8),(3,4),(6,7)}");
  CHECK(insert_short_chord(Matching(), 1).to_string() == "{(1,2)}");
  CHECK_THROWS_AS(insert_short_chord(m, 0), std::out_of_range);
  CHECK_THROWS_AS(insert_short_chord(m, 8), std::out_of_range);
  for (const auto& x : enumerate_all_matchings(6)) {
    const Matching c = core(x);
    for (int i = 1; i <= 7; ++i) {
      const Matching a = insert_short_chord(x, i);
      CHECK(core(a) == c);
      for (int j = 1; j <= 7; ++j) {
        const auto cls = equivalence_class(a);
        CHECK(std::binary_search(cls.begin(), cls.end(),
                                 insert_short_chord(x, j)));
      }
    }
  }
}

TEST_CASE("insertion witnesses rebuild every matching") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      Matching rebuilt = core(m);
      for (int i : insertion_witness(m)) {
        rebuilt = insert_short_chord(rebuilt, i);
      }
      CHECK(rebuilt == m);
    }
  }
}

TEST_CASE("class generating functions") {
  const auto pair = equivalence_class(Matching::parse("{(1,2),(3,4)}"));
  CHECK(class_generating_function(pair).to_string() == "s(2,2)");
  const auto solo = equivalence_class(Matching::parse("{(1,3),(2,4)}"));
  CHECK(class_generating_function(solo).to_string() == "s(4)");
  std::vector<Matching> all = pair;
  all.insert(all.end(), solo.begin(), solo.end());
  CHECK(class_generating_function(all).to_string() == "s(4) + s(2,2)");
  CHECK_THROWS_AS(
      class_generating_function({Matching::parse("{(1,2),(3,4)}")}),
      std::invalid_argument);
  CHECK_THROWS_AS(class_generating_function({}), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      for (const auto& cls : equivalence_classes(n, f)) {
        const int k = (n - core(cls.front()).n()) / 2;
        SchurExpansion expected(n);
        expected.add(Partition::two_row(n, k), 1);
        CHECK(class_generating_function(cls) == expected);
      }
    }
  }
}
