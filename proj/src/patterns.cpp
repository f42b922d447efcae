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

#include "matchsym/patterns.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace matchsym {
namespace {

bool embed_rec(const Matching& m, const Matching& p, int j,
               std::vector<int>& idx) {
  const int n1 = p.n();
  if (j > n1) return true;
  const int n = m.n();
  const int lo = idx[j - 1] + 1;
  const int partner = p.mate(j);
  if (partner != 0 && partner < j) {
    // Closer: position forced by the opener's image.
    const int v = m.mate(idx[partner]);
    if (v < lo) return false;
    idx[j] = v;
    return embed_rec(m, p, j + 1, idx);
  }
  for (int v = lo; v <= n - (n1 - j); ++v) {
    const bool ok = partner == 0 ? m.is_singleton(v) : m.mate(v) > v;
    if (!ok) continue;
    idx[j] = v;
    if (embed_rec(m, p, j + 1, idx)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_embedding(const Matching& m,
                                               const Matching& pattern) {
  if (pattern.n() > m.n() || pattern.num_chords() > m.num_chords() ||
      pattern.num_singletons() > m.num_singletons()) {
    return std::nullopt;
  }
  std::vector<int> idx(pattern.n() + 1, 0);
  if (!embed_rec(m, pattern, 1, idx)) return std::nullopt;
  idx.erase(idx.begin());
  return idx;
}

bool contains_pattern(const Matching& m, const Matching& pattern) {
  return find_embedding(m, pattern).has_value();
}

std::vector<Matching> avoiders(int n, int f,
                               const std::vector<Matching>& patterns,
                               const Workers& workers) {
  const std::vector<Matching> all = enumerate_matchings(n, f);
  return parallel_reduce<std::vector<Matching>>(
      all.size(), workers, [] { return std::vector<Matching>{}; },
      [&](std::vector<Matching>& acc, std::size_t i) {
        for (const Matching& p : patterns) {
          if (contains_pattern(all[i], p)) return;
        }
        acc.push_back(all[i]);
      },
      [](std::vector<Matching>& acc, std::vector<Matching>&& part) {
        acc.insert(acc.end(), part.begin(), part.end());
      });
}

bool singleton_pattern_schur_positive(const Matching& m) {
  return short_set(m).empty() || m == Matching::ladder(1);
}

AvoiderExpansion avoider_expansion(int n, int f, const Matching& pattern,
                                   const Workers& workers) {
  const auto set = avoiders(n, f, {pattern}, workers);
  return {n, f, set.size(),
          schur_expand(descent_vector(set, short_set, n, workers))};
}

std::optional<AvoiderExpansion> find_non_positive_avoiders(
    const Matching& pattern, int max_n, const Workers& workers) {
  for (int n = 0; n <= max_n; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      AvoiderExpansion e = avoider_expansion(n, f, pattern, workers);
      if (!e.schur_positive()) return e;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

IntersectionGraph::IntersectionGraph(const Matching& m) : chords_(m.chords()) {
  const int k = static_cast<int>(chords_.size());
  if (k > 32) throw std::invalid_argument("too many chords for a graph");
  adjacency_.assign(k, 0);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) {
      if (chords_intersect(chords_[u], chords_[v])) {
        adjacency_[u] |= std::uint32_t{1} << v;
        adjacency_[v] |= std::uint32_t{1} << u;
      }
    }
  }
}

int IntersectionGraph::edges() const {
  int total = 0;
  for (std::uint32_t row : adjacency_) total += std::popcount(row);
  return total / 2;
}

std::uint64_t IntersectionGraph::canonical_label() const {
  const int k = vertices();
  if (k > kMaxCanonicalVertices) {
    throw std::invalid_argument("graph with " + std::to_string(k) +
                                " vertices is too large to canonicalize");
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b, ++bit) {
        if (adjacent(order[a], order[b])) code |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(order.begin(), order.end()));
  return k == 0 ? 0 : best;
}

namespace {

int clique_rec(const std::vector<std::uint32_t>& adj, std::uint32_t cand,
               int size) {
  if (cand == 0) return size;
  int best = size;
  while (cand != 0) {
    if (size + std::popcount(cand) <= best) break;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    best = std::max(best, clique_rec(adj, cand & adj[v], size + 1));
  }
  return best;
}

}  // namespace

int IntersectionGraph::max_clique() const {
  const int k = vertices();
  const std::uint32_t all =
      k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
  return clique_rec(adjacency_, all, 0);
}

int crossing_number(const Matching& m) {
  return IntersectionGraph(m).max_clique();
}

std::vector<int> intersect_counts(const Matching& m) {
  std::vector<int> out(m.n(), 0);
  const auto chords = m.chords();
  for (const Chord& a : chords) {
    int count = 0;
    for (const Chord& b : chords) {
      if (!(a == b) && chords_intersect(a, b)) ++count;
    }
    out[a.open - 1] = out[a.close - 1] = count;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(RefineKey key) {
  switch (key) {
    case RefineKey::kIsoClass: return "iso-class";
    case RefineKey::kCrossing: return "crossing";
    case RefineKey::kPairCount: return "pair-count";
    case RefineKey::kIntersectingChords: return "intersecting-chords";
    case RefineKey::kMaxI: return "max-I";
  }
  return "?";
}

std::vector<RefineKey> all_refine_keys() {
  return {RefineKey::kIsoClass, RefineKey::kCrossing, RefineKey::kPairCount,
          RefineKey::kIntersectingChords, RefineKey::kMaxI};
}

RefineKey parse_refine_key(std::string_view name) {
  for (RefineKey k : all_refine_keys()) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown refinement key '" + std::string(name) +
                              "'");
}

std::vector<std::int64_t> refine_value(const Matching& m, RefineKey key) {
  switch (key) {
    case RefineKey::kIsoClass: {
      const IntersectionGraph g(m);
      return {g.vertices(), static_cast<std::int64_t>(g.canonical_label())};
    }
    case RefineKey::kCrossing:
      return {crossing_number(m)};
    case RefineKey::kPairCount: {
      const auto counts = intersect_counts(m);
      return {std::accumulate(counts.begin(), counts.end(), 0) / 2};
    }
    case RefineKey::kIntersectingChords: {
      const auto counts = intersect_counts(m);
      return {std::count_if(counts.begin(), counts.end(),
                            [](int c) { return c > 0; }) / 2};
    }
    case RefineKey::kMaxI: {
      const auto counts = intersect_counts(m);
      return {counts.empty() ? 0
                             : *std::max_element(counts.begin(), counts.end())};
    }
  }
  return {};
}

std::string refine_value_string(const std::vector<std::int64_t>& value,
                                RefineKey key) {
  if (key == RefineKey::kIsoClass && value.size() == 2) {
    return "v" + std::to_string(value[0]) + ":" + std::to_string(value[1]);
  }
  std::string out;
  for (std::int64_t v : value) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::vector<RefineCell> refine_by(int n, int f, RefineKey key,
                                  const Workers& workers) {
  const std::vector<Matching> all = enumerate_matchings(n, f);
  std::vector<std::vector<std::int64_t>> values(all.size());
  parallel_for(all.size(), workers,
               [&](std::size_t i) { values[i] = refine_value(all[i], key); });
  std::map<std::vector<std::int64_t>, std::vector<Matching>> cells;
  for (std::size_t i = 0; i < all.size(); ++i) cells[values[i]].push_back(all[i]);
  std::vector<RefineCell> out;
  for (const auto& [value, members] : cells) {
    out.push_back({refine_value_string(value, key), members.size(),
                   schur_expand(descent_vector(members, short_set, n))});
  }
  return out;
}

}  // namespace matchsym
