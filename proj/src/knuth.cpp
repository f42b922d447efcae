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

#include "matchsym/knuth.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "matchsym/bijection.hpp"

namespace matchsym {
namespace {

// Acts on a, a+1, a+2: the short chord at one end moves to the other end
// and the remaining vertex, with its mate if any, takes the freed slot.
Matching shifted(const Matching& m, int a, bool rightward) {
  std::vector<std::uint8_t> mate = m.mates();
  const int third_old = rightward ? a + 2 : a;
  const int third_new = rightward ? a : a + 2;
  const int j = m.mate(third_old);
  for (int v = a; v <= a + 2; ++v) mate[v] = 0;
  const int s = rightward ? a + 1 : a;
  mate[s] = static_cast<std::uint8_t>(s + 1);
  mate[s + 1] = static_cast<std::uint8_t>(s);
  if (j != 0) {
    mate[third_new] = static_cast<std::uint8_t>(j);
    mate[j] = static_cast<std::uint8_t>(third_new);
  }
  return Matching::from_mates(std::move(mate));
}

}  // namespace

std::vector<Move> moves(const Matching& m) {
  std::vector<Move> out;
  const int n = m.n();
  for (int a = 1; a < n; ++a) {
    if (m.mate(a) != a + 1) continue;
    if (a + 2 <= n) {
      const int j = m.mate(a + 2);
      out.push_back({j ? MoveKind::kChordChord : MoveKind::kChordSingleton, a,
                     j, true, shifted(m, a, true)});
    }
    if (a >= 2) {
      const int j = m.mate(a - 1);
      out.push_back({j ? MoveKind::kChordChord : MoveKind::kChordSingleton,
                     a - 1, j, false, shifted(m, a - 1, false)});
    }
  }
  return out;
}

std::vector<Matching> elementary_moves(const Matching& m) {
  std::vector<Matching> out;
  for (Move& mv : moves(m)) out.push_back(std::move(mv.result));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Matching> equivalence_class(const Matching& m) {
  std::unordered_set<Matching> seen{m};
  std::deque<Matching> queue{m};
  while (!queue.empty()) {
    const Matching cur = std::move(queue.front());
    queue.pop_front();
    for (Matching& next : elementary_moves(cur)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Matching> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Matching>> equivalence_classes(int n, int f) {
  std::vector<std::vector<Matching>> out;
  std::unordered_set<Matching> assigned;
  for (const Matching& m : enumerate_matchings(n, f)) {
    if (assigned.contains(m)) continue;
    auto cls = equivalence_class(m);
    assigned.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_closed_under_moves(const std::vector<Matching>& set) {
  const std::unordered_set<Matching> members(set.begin(), set.end());
  for (const Matching& m : set) {
    for (const Move& mv : moves(m)) {
      if (!members.contains(mv.result)) return false;
    }
  }
  return true;
}

Matching insert_short_chord(const Matching& m, int i) {
  const int n = m.n();
  if (i < 1 || i > n + 1) {
    throw std::out_of_range("insertion position " + std::to_string(i) +
                            " outside [1, " + std::to_string(n + 1) + "]");
  }
  auto lift = [i](int v) { return v >= i ? v + 2 : v; };
  std::vector<Chord> chords{{i, i + 1}};
  for (const Chord& c : m.chords()) chords.push_back({lift(c.open), lift(c.close)});
  std::vector<int> singles;
  for (int v : m.singletons()) singles.push_back(lift(v));
  return Matching::from_blocks(n + 2, chords, singles);
}

std::vector<int> insertion_witness(const Matching& m) {
  const ReductionResult r = reduce(m);
  std::vector<bool> alive(m.n() + 1, true);
  std::vector<int> positions;
  for (const Chord& c : r.unstable_chords) {
    int rank = 1;
    for (int v = 1; v < c.open; ++v) rank += alive[v] ? 1 : 0;
    positions.push_back(rank);
    alive[c.open] = alive[c.close] = false;
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

SchurExpansion class_generating_function(const std::vector<Matching>& cls) {
  if (cls.empty()) throw std::invalid_argument("empty class");
  const int n = cls.front().n();
  for (const Matching& m : cls) {
    if (m.n() != n) throw std::invalid_argument("class mixes sizes");
  }
  if (!is_closed_under_moves(cls)) {
    throw std::invalid_argument("set is not closed under moves");
  }
  auto q = schur_expand(descent_vector(cls, short_set, n));
  if (!q) throw std::invalid_argument("class is not symmetric");
  return *q;
}

}  // namespace matchsym
