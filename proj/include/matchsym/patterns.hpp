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

// Pattern containment, intersection graphs, and refinements of M_{N,f} by
// crossing statistics.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchsym/matching.hpp"
#include "matchsym/parallel.hpp"
#include "matchsym/symfunc.hpp"

namespace matchsym {

/// Indices i_1 < ... < i_{N1} embedding `pattern` into `m`, or nullopt.
std::optional<std::vector<int>> find_embedding(const Matching& m,
                                               const Matching& pattern);
bool contains_pattern(const Matching& m, const Matching& pattern);

/// Elements of M_{N,f} containing none of `patterns`, in enumeration order.
std::vector<Matching> avoiders(int n, int f,
                               const std::vector<Matching>& patterns,
                               const Workers& workers = Workers::serial());

/// Short(m) empty, or m = {(1,2)}.
bool singleton_pattern_schur_positive(const Matching& m);

/// Avoiders of a single pattern in M_{N,f} and their Schur expansion under
/// Short; `expansion` is nullopt when the set is not symmetric.
struct AvoiderExpansion {
  int n = 0;
  int f = 0;
  std::size_t count = 0;
  std::optional<SchurExpansion> expansion;

  bool schur_positive() const {
    return expansion && expansion->is_schur_positive();
  }
};

AvoiderExpansion avoider_expansion(int n, int f, const Matching& pattern,
                                   const Workers& workers = Workers::serial());

/// First (N', f') with N' <= max_n, scanned by N' then f', whose avoider
/// set is not Schur-positive.
std::optional<AvoiderExpansion> find_non_positive_avoiders(
    const Matching& pattern, int max_n,
    const Workers& workers = Workers::serial());

/// Chords as vertices, interleaving pairs as edges. Vertex order follows
/// m.chords().
class IntersectionGraph {
 public:
  /// Graphs above this many vertices are refused by canonical_label().
  static constexpr int kMaxCanonicalVertices = 10;

  explicit IntersectionGraph(const Matching& m);

  int vertices() const { return static_cast<int>(adjacency_.size()); }
  int edges() const;
  bool adjacent(int u, int v) const { return (adjacency_[u] >> v) & 1u; }
  const std::vector<Chord>& chords() const { return chords_; }

  /// Smallest upper-triangle adjacency code over all vertex orders; equal
  /// for isomorphic graphs. Bit order: (0,1), (0,2), ..., (1,2), ...
  std::uint64_t canonical_label() const;
  /// Size of a largest clique.
  int max_clique() const;

 private:
  std::vector<Chord> chords_;
  std::vector<std::uint32_t> adjacency_;
};

/// Largest set of pairwise intersecting chords.
int crossing_number(const Matching& m);
/// I_1..I_N: chords meeting the chord through i, 0 at singletons.
std::vector<int> intersect_counts(const Matching& m);

enum class RefineKey {
  kIsoClass,
  kCrossing,
  kPairCount,
  kIntersectingChords,
  kMaxI,
};

/// "iso-class", "crossing", "pair-count", "intersecting-chords", "max-I".
std::string_view to_string(RefineKey key);
/// Throws std::invalid_argument for unknown names.
RefineKey parse_refine_key(std::string_view name);
std::vector<RefineKey> all_refine_keys();

/// Sortable key; iso-class keys are (vertices, canonical label).
std::vector<std::int64_t> refine_value(const Matching& m, RefineKey key);
std::string refine_value_string(const std::vector<std::int64_t>& value,
                                RefineKey key);

struct RefineCell {
  std::string key;
  std::size_t count = 0;
  std::optional<SchurExpansion> expansion;

  bool schur_positive() const {
    return expansion && expansion->is_schur_positive();
  }
};

/// Cells of M_{N,f} split by `key`, ordered by key value.
std::vector<RefineCell> refine_by(int n, int f, RefineKey key,
                                  const Workers& workers = Workers::serial());

}  // namespace matchsym
