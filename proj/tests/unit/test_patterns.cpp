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
#include "matchsym/knuth.hpp"
#include "matchsym/patterns.hpp"

using namespace matchsym;

namespace {

// Independent containment check over every index subset.
bool contains_brute(const Matching& m, const Matching& p) {
  const int n = m.n();
  const int k = p.n();
  if (k > n) return false;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> idx{0};
    for (int v = 1; v <= n; ++v) {
      if ((s >> (v - 1)) & 1u) idx.push_back(v);
    }
    bool ok = true;
    for (int a = 1; a <= k && ok; ++a) {
      if (p.is_singleton(a)) {
        ok = m.is_singleton(idx[a]);
      } else {
        ok = m.mate(idx[a]) == idx[p.mate(a)];
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<int> degrees(const IntersectionGraph& g) {
  std::vector<int> out;
  for (int u = 0; u < g.vertices(); ++u) {
    int d = 0;
    for (int v = 0; v < g.vertices(); ++v) d += g.adjacent(u, v);
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("containment examples") {
  const Matching m2 = Matching::parse("{(1,7),(2,10),(3,6),(4,5),(8,9)}");
  const Matching cross = Matching::parse("{(1,3),(2,4)}");
  const auto witness = find_embedding(m2, cross);
  REQUIRE(witness);
  CHECK(*witness == std::vector<int>{1, 2, 7, 10});
  CHECK(contains_pattern(m2, Matching()));
  CHECK(contains_pattern(Matching(), Matching()));
  CHECK_FALSE(contains_pattern(Matching::singletons_only(5),
                               Matching::parse("{(1,2)}")));
  CHECK_FALSE(contains_pattern(cross, m2));
}

TEST_CASE("containment agrees with subset search") {
  std::vector<Matching> patterns;
  for (int k = 0; k <= 4; ++k) {
    auto more = enumerate_all_matchings(k);
    patterns.insert(patterns.end(), more.begin(), more.end());
  }
  for (int n = 0; n <= 7; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      for (const auto& p : patterns) {
        const auto e = find_embedding(m, p);
        CHECK(e.has_value() == contains_brute(m, p));
        if (e) {
          const std::vector<int>& idx = *e;
          for (int a = 1; a <= p.n(); ++a) {
            if (p.is_singleton(a)) {
              CHECK(m.is_singleton(idx[a - 1]));
            } else {
              CHECK(m.mate(idx[a - 1]) == idx[p.mate(a) - 1]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("avoider examples") {
  for (int n = 0; n <= 6; ++n) {
    const auto only = avoiders(n, n, {Matching::parse("{(1,2)}")});
    REQUIRE(only.size() == 1);
    CHECK(only[0] == Matching::singletons_only(n));
  }
  const auto nc = avoiders(4, 0, {Matching::parse("{(1,3),(2,4)}")});
  CHECK(nc.size() == 2);
  CHECK(avoiders(6, 2, {}) == enumerate_matchings(6, 2));
  CHECK(avoiders(8, 0, {Matching::parse("{(1,3),(2,4)}")}, Workers(3)) ==
        avoiders(8, 0, {Matching::parse("{(1,3),(2,4)}")}));
}

TEST_CASE("singleton pattern characterization") {
  CHECK(singleton_pattern_schur_positive(Matching::parse("{(1,3),(2,4)}")));
  CHECK(singleton_pattern_schur_positive(Matching::parse("{(1,2)}")));
  const Matching bad = Matching::parse("{(1,2),(3)}");
  CHECK_FALSE(singleton_pattern_schur_positive(bad));
  const auto witness = find_non_positive_avoiders(bad, 9);
  REQUIRE(witness);
  CHECK(witness->n == 3);
  CHECK(witness->f == 1);
  CHECK_FALSE(witness->expansion.has_value());
  for (int n = 0; n <= 4; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      const bool positive = !find_non_positive_avoiders(m, 7).has_value();
      CHECK(positive == singleton_pattern_schur_positive(m));
    }
  }
}

TEST_CASE("avoiders of short-chord-free patterns are closed under moves") {
  for (int k = 0; k <= 5; ++k) {
    for (const auto& p : enumerate_all_matchings(k)) {
      if (!short_set(p).empty()) continue;
      for (int n = 0; n <= 8; ++n) {
        for (int f = n % 2; f <= n; f += 2) {
          CHECK(is_closed_under_moves(avoiders(n, f, {p})));
        }
      }
    }
  }
}

TEST_CASE("intersection statistics") {
  const Matching m = Matching::parse("{(1,3),(2,6),(4,5)}");
  const IntersectionGraph g(m);
  CHECK(g.vertices() == 3);
  CHECK(g.edges() == 1);
  CHECK(crossing_number(m) == 2);
  CHECK(intersect_counts(m) == std::vector<int>{1, 1, 1, 0, 0, 1});
  auto multiset = intersect_counts(m);
  std::sort(multiset.begin(), multiset.end(), std::greater<>());
  CHECK(multiset == std::vector<int>{1, 1, 1, 1, 0, 0});
  const Matching nc = Matching::parse("{(1,6),(2,3),(4,5),(7)}");
  CHECK(IntersectionGraph(nc).edges() == 0);
  CHECK(crossing_number(nc) <= 1);
  CHECK(crossing_number(Matching::parse("{(1,7),(2,10),(3,6),(4,5),(8,9)}")) ==
        2);
  CHECK(crossing_number(Matching::parse("{(1,4),(2,5),(3,6)}")) == 3);
}

TEST_CASE("canonical labels") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& m : enumerate_all_matchings(n)) {
      const IntersectionGraph g(m);
      const auto label = g.canonical_label();
      for (const auto& next : elementary_moves(m)) {
        CHECK(IntersectionGraph(next).canonical_label() == label);
      }
    }
  }
  // Equal labels imply equal degree sequences and clique numbers.
  std::map<std::pair<int, std::uint64_t>, std::pair<std::vector<int>, int>> seen;
  for (const auto& m : enumerate_all_matchings(10)) {
    const IntersectionGraph g(m);
    const auto key = std::make_pair(g.vertices(), g.canonical_label());
    const auto value = std::make_pair(degrees(g), g.max_clique());
    auto [it, inserted] = seen.emplace(key, value);
    if (!inserted) CHECK(it->second == value);
  }
}

TEST_CASE("refinement keys") {
  for (RefineKey key : all_refine_keys()) {
    CHECK(parse_refine_key(to_string(key)) == key);
  }
  CHECK_THROWS(parse_refine_key("nonsense"));
  const auto cells = refine_by(4, 0, RefineKey::kCrossing);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].key == "1");
  CHECK(cells[0].count == 2);
  CHECK(cells[0].expansion->to_string() == "s(2,2)");
  CHECK(cells[1].key == "2");
  CHECK(cells[1].count == 1);
  CHECK(cells[1].expansion->to_string() == "s(4)");
  for (const auto& cell : refine_by(6, 0, RefineKey::kPairCount)) {
    if (cell.key != "0") continue;
    CHECK(cell.count == 5);
    CHECK(cell.schur_positive());
  }
  for (int n = 1; n <= 8; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      for (RefineKey key : all_refine_keys()) {
        std::size_t total = 0;
        for (const auto& cell : refine_by(n, f, key)) {
          CHECK(cell.schur_positive());
          total += cell.count;
        }
        CHECK(total == count_matchings(n, f));
      }
    }
  }
}
