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

#include <random>

#include "doctest.h"
#include "matchsym/bijection.hpp"

using namespace matchsym;

namespace {

const Matching m1 = Matching::parse("{(1,2),(3,5),(4)}");
const Matching m2 = Matching::parse("{(1,7),(2,10),(3,6),(4,5),(8,9)}");

std::vector<BallotPath> all_paths(int n) {
  std::vector<BallotPath> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<int> steps;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int s = ((bits >> i) & 1u) ? -1 : 1;
      h += s;
      ok = h >= 0;
      steps.push_back(s);
    }
    if (ok) out.emplace_back(steps);
  }
  return out;
}

bool vertex_stable(const ReductionResult& r, int v) {
  return std::find(r.stable.begin(), r.stable.end(), v) != r.stable.end();
}

}  // namespace

TEST_CASE("reduction examples") {
  const auto r1 = reduce(m1);
  CHECK(r1.core.to_string() == "{(1,3),(2)}");
  CHECK(r1.stable == std::vector<int>{3, 4, 5});
  const auto r2 = reduce(m2);
  CHECK(r2.core.to_string() == "{(1,3),(2,4)}");
  CHECK(r2.stable == std::vector<int>{1, 2, 7, 10});
  const Matching free = Matching::parse("{(1,3),(2,4),(5)}");
  const auto r3 = reduce(free);
  CHECK(r3.core == free);
  CHECK(r3.stable == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r3.unstable_chords.empty());
}

TEST_CASE("tableau examples") {
  CHECK(tableau_of(m1).second_row() == std::vector<int>{2});
  CHECK(tableau_of(m2).second_row() == std::vector<int>{5, 6, 9});
  CHECK(tableau_of(Matching::parse("{(1,3),(2,4)}")).k() == 0);
  const auto f = forward(m2);
  CHECK(f.core.to_string() == "{(1,3),(2,4)}");
  CHECK(f.tableau.descent_set() == short_set(m2));
}

TEST_CASE("two-row tableau validation") {
  CHECK_THROWS_AS(TwoRowTableau::from_second_row(4, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TwoRowTableau::from_second_row(4, {2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TwoRowTableau::from_second_row(4, {5}),
                  std::invalid_argument);
  CHECK(TwoRowTableau::parse(10, "5,6,9").second_row() ==
        std::vector<int>{5, 6, 9});
  CHECK(TwoRowTableau::parse(10, "{5, 6, 9}").second_row() ==
        std::vector<int>{5, 6, 9});
  CHECK(TwoRowTableau::parse(3, "").k() == 0);
  const auto t = TwoRowTableau::parse(5, "2");
  CHECK(t.first_row() == std::vector<int>{1, 3, 4, 5});
  CHECK(descent_set(t.to_syt()) == t.descent_set());
  CHECK(TwoRowTableau::from_syt(t.to_syt()) == t);
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      const auto all = enumerate_two_row_tableaux(n, k);
      CHECK(all.size() == hook_length_count(Partition::two_row(n, k)));
      for (const auto& x : all) {
        CHECK(x.descent_set() == descent_set(x.to_syt()));
      }
    }
  }
}

TEST_CASE("ballot paths") {
  const auto p = path_of_tableau(TwoRowTableau::parse(10, "5,6,9"));
  CHECK(std::vector<int>(p.heights().begin() + 1, p.heights().end()) ==
        std::vector<int>{1, 2, 3, 4, 3, 2, 3, 4, 3, 4});
  CHECK(p.step_height(3) == 3);
  const auto q = path_of_tableau(TwoRowTableau::parse(5, "2"));
  CHECK(std::vector<int>(q.heights().begin() + 1, q.heights().end()) ==
        std::vector<int>{1, 0, 1, 2, 3});
  const auto flat = path_of_tableau(TwoRowTableau(4, 0));
  CHECK(flat.downs().empty());
  CHECK(flat.endpoint() == 4);
  CHECK_THROWS_AS(BallotPath({1, -1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(BallotPath({1, 2}), std::invalid_argument);
  CHECK(tableau_of_path(p) == TwoRowTableau::parse(10, "5,6,9"));
}

TEST_CASE("unstable matching of a path") {
  const auto part = unstable_matching_of_path(
      path_of_tableau(TwoRowTableau::parse(10, "5,6,9")));
  CHECK(part.chords == std::vector<Chord>{{4, 5}, {3, 6}, {8, 9}});
  CHECK(part.stable == std::vector<int>{1, 2, 7, 10});
  const auto up = unstable_matching_of_path(BallotPath({1, 1, 1}));
  CHECK(up.chords.empty());
  CHECK(up.stable == std::vector<int>{1, 2, 3});
  const auto pair = unstable_matching_of_path(BallotPath({1, -1}));
  CHECK(pair.chords == std::vector<Chord>{{1, 2}});
  CHECK(pair.stable.empty());
}

TEST_CASE("unstable matchings are non-crossing with the stated stable set") {
  for (int n = 0; n <= 14; ++n) {
    for (const auto& p : all_paths(n)) {
      const auto part = unstable_matching_of_path(p);
      for (std::size_t a = 0; a < part.chords.size(); ++a) {
        for (std::size_t b = a + 1; b < part.chords.size(); ++b) {
          CHECK_FALSE(chords_intersect(part.chords[a], part.chords[b]));
        }
      }
      std::vector<int> expected;
      for (int i : p.ups()) {
        bool higher = true;
        for (int j = i + 1; j <= n && higher; ++j) {
          higher = p.step_height(j) > p.step_height(i);
        }
        if (higher) expected.push_back(i);
      }
      CHECK(part.stable == expected);
      CHECK(static_cast<int>(part.stable.size()) == p.endpoint());
    }
  }
}

TEST_CASE("inverse examples") {
  const Matching m0 = Matching::parse("{(1,3),(2,4)}");
  CHECK(inverse(m0, TwoRowTableau::parse(10, "5,6,9")) == m2);
  CHECK(inverse(Matching(), TwoRowTableau::parse(4, "3,4")).to_string() ==
        "{(1,4),(2,3)}");
  CHECK(inverse(Matching(), TwoRowTableau::parse(4, "2,4")).to_string() ==
        "{(1,2),(3,4)}");
  CHECK(inverse(m0, TwoRowTableau(4, 0)) == m0);
  CHECK_THROWS_AS(inverse(Matching::parse("{(1,2)}"), TwoRowTableau(2, 0)),
                  MatchingError);
  CHECK_THROWS_AS(inverse(m0, TwoRowTableau::parse(5, "2")), MatchingError);
}

TEST_CASE("bijection roundtrips") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      const auto image = forward(m);
      CHECK(short_set(image.core).empty());
      CHECK(image.tableau.descent_set() == short_set(m));
      CHECK(inverse(image.core, image.tableau) == m);
    }
    for (int k = 0; 2 * k <= n; ++k) {
      const auto tableaux = enumerate_two_row_tableaux(n, k);
      for (int f = (n - 2 * k) % 2; f <= n - 2 * k; f += 2) {
        for_each_matching(n - 2 * k, f, [&](const Matching& m0) {
          if (!short_set(m0).empty()) return;
          for (const auto& t : tableaux) {
            CHECK(forward(inverse(m0, t)) == BijectionImage{m0, t});
          }
        });
      }
    }
  }
}

TEST_CASE("removal order does not matter") {
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      const auto base = reduce(m);
      for (int seed = 0; seed < 5; ++seed) {
        const auto r = reduce_random(m, rng);
        CHECK(r.core == base.core);
        CHECK(r.stable == base.stable);
      }
      const auto last = reduce_with(m, [](std::size_t c) { return c - 1; });
      CHECK(last.stable == base.stable);
    }
  }
  CHECK_THROWS_AS(reduce_with(m1, [](std::size_t c) { return c; }),
                  std::out_of_range);
}

TEST_CASE("stable chord properties") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      const auto r = reduce(m);
      const auto chords = m.chords();
      for (const Chord& c : chords) {
        const bool crossed = std::any_of(
            chords.begin(), chords.end(),
            [&](const Chord& d) { return d != c && chords_intersect(c, d); });
        const bool stable = vertex_stable(r, c.open);
        CHECK(stable == vertex_stable(r, c.close));
        if (crossed) CHECK(stable);
        bool inner = false;
        for (int v = c.open + 1; v < c.close; ++v) inner |= vertex_stable(r, v);
        CHECK(stable == inner);
      }
      // A block-closed interval carrying a perfect non-crossing matching
      // holds no stable vertex.
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; j += 2) {
          bool ok = true;
          for (int v = i; v <= j && ok; ++v) {
            const int w = m.mate(v);
            ok = w >= i && w <= j;
            for (int u = i; u <= j && ok; ++u) {
              const int x = m.mate(u);
              if (u < v && x > v && x < w) ok = false;
            }
          }
          if (!ok) continue;
          for (int v = i; v <= j; ++v) CHECK_FALSE(vertex_stable(r, v));
        }
      }
    }
  }
}
