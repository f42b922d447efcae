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

#include "matchsym/schreier.hpp"

#include <deque>
#include <stdexcept>

namespace matchsym {
namespace {

std::uint64_t key_of(const Matching& m) {
  std::uint64_t key = 0;
  for (int v = 1; v <= m.n(); ++v) {
    key |= static_cast<std::uint64_t>(m.mate(v)) << (4 * (v - 1));
  }
  return key;
}

std::string compact_label(const Matching& m) {
  const std::string sep = m.n() >= 10 ? "." : "";
  std::string out;
  for (const Chord& c : m.chords()) {
    if (!out.empty()) out += "|";
    out += std::to_string(c.open) + sep + std::to_string(c.close);
  }
  return out;
}

}  // namespace

Matching apply_transposition(const Matching& m, int i) {
  if (!m.is_perfect()) {
    throw MatchingError("apply_transposition: " + m.to_string() +
                        " is not perfect");
  }
  if (i < 1 || i >= m.n()) {
    throw std::out_of_range("generator " + std::to_string(i) +
                            " outside [1, " + std::to_string(m.n() - 1) + "]");
  }
  auto swap = [i](int v) { return v == i ? i + 1 : v == i + 1 ? i : v; };
  std::vector<Chord> chords;
  for (const Chord& c : m.chords()) chords.push_back({swap(c.open), swap(c.close)});
  return Matching::from_chords(m.n(), chords);
}

SchreierGraph SchreierGraph::build(int two_n, int max_two_n) {
  if (two_n < 0 || two_n % 2 != 0) {
    throw std::invalid_argument("2n must be even and nonnegative, got " +
                                std::to_string(two_n));
  }
  if (two_n > max_two_n || two_n > 14) {
    throw std::length_error(
        "2n=" + std::to_string(two_n) + " exceeds the bound " +
        std::to_string(std::min(max_two_n, 14)) + " (" +
        std::to_string(double_factorial_odd(two_n)) + " vertices)");
  }
  SchreierGraph g;
  g.two_n_ = two_n;
  g.vertices_ = enumerate_matchings(two_n, 0);
  const int gens = g.generators();
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    g.index_.emplace(key_of(g.vertices_[v]), static_cast<std::uint32_t>(v));
  }
  g.edges_.resize(g.vertices_.size() * gens);
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    const Matching& m = g.vertices_[v];
    for (int i = 1; i <= gens; ++i) {
      // Conjugating by s_i swaps the mates of i and i+1.
      std::vector<std::uint8_t> mate = m.mates();
      const int a = mate[i], b = mate[i + 1];
      std::uint32_t target;
      if (a == i + 1) {
        target = static_cast<std::uint32_t>(v);
      } else {
        mate[i] = static_cast<std::uint8_t>(b);
        mate[i + 1] = static_cast<std::uint8_t>(a);
        mate[a] = static_cast<std::uint8_t>(i + 1);
        mate[b] = static_cast<std::uint8_t>(i);
        target = g.index_.at(key_of(Matching::from_mates(std::move(mate))));
      }
      g.edges_[v * gens + (i - 1)] = target;
    }
  }
  g.root_ = g.index_.at(key_of(Matching::ladder(two_n / 2)));
  g.layer_.assign(g.vertices_.size(), -1);
  g.layer_[g.root_] = 0;
  std::deque<std::size_t> queue{g.root_};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= gens; ++i) {
      const std::size_t w = g.neighbor(v, i);
      if (g.layer_[w] < 0) {
        g.layer_[w] = g.layer_[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return g;
}

std::size_t SchreierGraph::index_of(const Matching& m) const {
  if (m.n() != two_n_) {
    throw std::out_of_range(m.to_string() + " is not a vertex");
  }
  const auto it = index_.find(key_of(m));
  if (it == index_.end()) {
    throw std::out_of_range(m.to_string() + " is not a vertex");
  }
  return it->second;
}

std::vector<std::size_t> SchreierGraph::layer_sizes() const {
  std::vector<std::size_t> out;
  for (int l : layer_) {
    if (l < 0) continue;
    if (static_cast<std::size_t>(l) >= out.size()) out.resize(l + 1, 0);
    ++out[l];
  }
  return out;
}

bool SchreierGraph::edges_are_involutions() const {
  for (std::size_t v = 0; v < size(); ++v) {
    for (int i = 1; i <= generators(); ++i) {
      if (neighbor(neighbor(v, i), i) != v) return false;
    }
  }
  return true;
}

bool SchreierGraph::is_bipartite_ignoring_loops() const {
  for (std::size_t v = 0; v < size(); ++v) {
    if (layer_[v] < 0) return false;
    for (int i = 1; i <= generators(); ++i) {
      const std::size_t w = neighbor(v, i);
      if (w == v) continue;
      const int d = layer_[w] - layer_[v];
      if (d != 1 && d != -1) return false;
    }
  }
  return true;
}

AscDesLoop asc_des_loop(const SchreierGraph& g, std::size_t v) {
  const int n = g.two_n();
  std::uint64_t asc = 0, des = 0, loop = 0;
  for (int i = 1; i <= g.generators(); ++i) {
    const std::size_t w = g.neighbor(v, i);
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (w == v) {
      loop |= bit;
    } else if (g.layer(w) > g.layer(v)) {
      asc |= bit;
    } else if (g.layer(w) < g.layer(v)) {
      des |= bit;
    } else {
      throw std::logic_error("edge inside a layer at " +
                             g.vertex(v).to_string());
    }
  }
  return {StatSet(n, asc), StatSet(n, des), StatSet(n, loop)};
}

AscDesLoop asc_des_loop(const SchreierGraph& g, const Matching& m) {
  return asc_des_loop(g, g.index_of(m));
}

StatSet involution_ascents(const Matching& m) {
  if (!m.is_perfect()) {
    throw MatchingError("involution_ascents: " + m.to_string() +
                        " is not perfect");
  }
  std::uint64_t mask = 0;
  for (int i = 1; i < m.n(); ++i) {
    if (m.mate(i) < m.mate(i + 1)) mask |= std::uint64_t{1} << (i - 1);
  }
  return StatSet(m.n(), mask);
}

ConjectureReport check_conjecture(const SchreierGraph& g,
                                  const Workers& workers) {
  const int n = g.two_n();
  using Pair = std::pair<DescentVector, DescentVector>;
  Pair vectors = parallel_reduce<Pair>(
      g.size(), workers, [n] { return Pair{DescentVector(n), DescentVector(n)}; },
      [&](Pair& acc, std::size_t v) {
        const AscDesLoop s = asc_des_loop(g, v);
        acc.first.add(s.asc);
        acc.second.add(s.des);
      },
      [](Pair& acc, Pair&& part) {
        acc.first += part.first;
        acc.second += part.second;
      });
  ConjectureReport out;
  out.two_n = n;
  out.equidistributed = vectors.first == vectors.second;
  out.asc_vector = std::move(vectors.first);
  out.des_vector = std::move(vectors.second);
  out.asc_expansion = schur_expand(out.asc_vector);
  out.des_expansion = schur_expand(out.des_vector);
  return out;
}

std::string to_dot(const SchreierGraph& g, bool include_loops) {
  std::string out = "graph schreier_" + std::to_string(g.two_n()) + " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" +
           compact_label(g.vertex(v)) + "\"];\n";
  }
  // One rank per layer so dot draws the grading top to bottom.
  std::vector<std::string> ranks(g.layer_sizes().size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    ranks[g.layer(v)] += " v" + std::to_string(v) + ";";
  }
  for (const std::string& r : ranks) out += "  { rank=same;" + r + " }\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int i = 1; i <= g.generators(); ++i) {
      const std::size_t w = g.neighbor(v, i);
      if (w < v || (w == v && !include_loops)) continue;
      out += "  v" + std::to_string(v) + " -- v" + std::to_string(w) +
             " [label=\"" + std::to_string(i) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace matchsym
