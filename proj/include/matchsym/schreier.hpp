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

// Schreier graph of S_2n acting on perfect matchings by conjugation with
// simple transpositions. BFS layers from the ladder matching give the
// involutive length.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchsym/descent_vector.hpp"
#include "matchsym/matching.hpp"
#include "matchsym/parallel.hpp"
#include "matchsym/statset.hpp"
#include "matchsym/symfunc.hpp"

namespace matchsym {

/// s_i . m: swaps the labels i and i+1. Throws MatchingError for a
/// non-perfect m and std::out_of_range unless 1 <= i < N.
Matching apply_transposition(const Matching& m, int i);

class SchreierGraph {
 public:
  static constexpr int kDefaultMax = 14;

  /// Throws std::invalid_argument for odd or negative 2n and
  /// std::length_error above `max_two_n`.
  static SchreierGraph build(int two_n, int max_two_n = kDefaultMax);

  int two_n() const { return two_n_; }
  int generators() const { return two_n_ > 0 ? two_n_ - 1 : 0; }
  std::size_t size() const { return vertices_.size(); }
  /// Vertices are ranked in enumeration order; rank 0 is not the ladder
  /// in general.
  const Matching& vertex(std::size_t v) const { return vertices_[v]; }
  /// Throws std::out_of_range for a matching not in the graph.
  std::size_t index_of(const Matching& m) const;
  std::size_t root() const { return root_; }

  /// Image of v under generator i in 1..2n-1 (v itself for a loop).
  std::uint32_t neighbor(std::size_t v, int i) const {
    return edges_[v * generators() + (i - 1)];
  }
  /// BFS distance from the ladder.
  int layer(std::size_t v) const { return layer_[v]; }
  std::vector<std::size_t> layer_sizes() const;

  /// Every generator acts as an involution on vertices.
  bool edges_are_involutions() const;
  /// No non-loop edge joins two vertices in the same layer. BFS layers
  /// differ by at most one along an edge, so this also means every
  /// non-loop edge changes the layer by exactly one.
  bool is_bipartite_ignoring_loops() const;

 private:
  int two_n_ = 0;
  std::size_t root_ = 0;
  std::vector<Matching> vertices_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> edges_;
  std::vector<int> layer_;
};

struct AscDesLoop {
  StatSet asc;
  StatSet des;
  StatSet loop;
};

AscDesLoop asc_des_loop(const SchreierGraph& g, std::size_t v);
AscDesLoop asc_des_loop(const SchreierGraph& g, const Matching& m);

/// {i : w(i) < w(i+1)} for the fixed-point-free involution w of m.
StatSet involution_ascents(const Matching& m);

struct ConjectureReport {
  int two_n = 0;
  bool equidistributed = false;
  DescentVector asc_vector;
  DescentVector des_vector;
  /// nullopt when the vector is not symmetric.
  std::optional<SchurExpansion> asc_expansion;
  std::optional<SchurExpansion> des_expansion;
};

ConjectureReport check_conjecture(const SchreierGraph& g,
                                  const Workers& workers = Workers::serial());

/// Graphviz source. Vertices are labelled like "12|34", edges by generator.
std::string to_dot(const SchreierGraph& g, bool include_loops = false);

}  // namespace matchsym
