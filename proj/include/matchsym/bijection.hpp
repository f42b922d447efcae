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

// Core reduction of matchings and the bijection
//
//   M_{N,f}  <->  union_k  M_{N-2k,f}(no short chords) x Syt(N-k,k)
//
// that sends short chords to tableau descents. Two-row tableaux are carried
// as their second row; ballot paths mediate the inverse direction.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "matchsym/matching.hpp"
#include "matchsym/statset.hpp"
#include "matchsym/tableaux.hpp"

namespace matchsym {

struct ReductionResult {
  /// Restriction of m to its stable vertices, re-indexed.
  Matching core;
  /// Stable vertices of m, ascending.
  std::vector<int> stable;
  /// Removed chords, in removal order.
  std::vector<Chord> unstable_chords;
};

/// Repeatedly deletes a chord whose endpoints are adjacent among the
/// remaining vertices, always the leftmost such chord.
ReductionResult reduce(const Matching& m);

/// Same process with a caller-chosen removal order: `pick(candidates)`
/// returns the index of the chord to delete among the currently short
/// chords listed left to right.
ReductionResult reduce_with(
    const Matching& m, const std::function<std::size_t(std::size_t)>& pick);

/// Uniformly random removal order.
ReductionResult reduce_random(const Matching& m, std::mt19937_64& rng);

Matching core(const Matching& m);

/// A standard Young tableau with at most two rows, stored by its second
/// row. Bit v-1 of the mask marks entry v.
class TwoRowTableau {
 public:
  TwoRowTableau() = default;
  /// Throws std::invalid_argument when the rows would break a column.
  TwoRowTableau(int n, std::uint64_t second_row);

  static TwoRowTableau from_second_row(int n, const std::vector<int>& row);
  /// Throws std::invalid_argument for shapes with three or more rows.
  static TwoRowTableau from_syt(const Syt& t);
  /// Parses "5,6,9" (second row) together with an explicit size n.
  static TwoRowTableau parse(int n, const std::string& second_row);

  int n() const { return n_; }
  int k() const { return std::popcount(row2_); }
  std::uint64_t second_row_mask() const { return row2_; }
  std::vector<int> first_row() const;
  std::vector<int> second_row() const;
  Partition shape() const { return Partition::two_row(n_, k()); }
  Syt to_syt() const;
  StatSet descent_set() const;

  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;

 private:
  int n_ = 0;
  std::uint64_t row2_ = 0;
};

/// Every tableau of shape (n-k, k). Entries are placed 1..n and the first
/// row is tried before the second.
std::vector<TwoRowTableau> enumerate_two_row_tableaux(int n, int k);

/// Second row = closers of unstable chords.
TwoRowTableau tableau_of(const Matching& m);

struct BijectionImage {
  Matching core;
  TwoRowTableau tableau;

  friend bool operator==(const BijectionImage&, const BijectionImage&) = default;
};

BijectionImage forward(const Matching& m);

/// Lattice path of +1/-1 steps from height 0 that never dips below zero.
class BallotPath {
 public:
  BallotPath() : heights_{0} {}
  /// Throws std::invalid_argument on a step other than +-1 or on a dip
  /// below the axis.
  explicit BallotPath(const std::vector<int>& steps);

  int length() const { return static_cast<int>(heights_.size()) - 1; }
  /// p_i, the height after i steps (p_0 = 0).
  int height(int i) const { return heights_[i]; }
  const std::vector<int>& heights() const { return heights_; }
  /// +1 or -1 for step i in 1..N.
  int step(int i) const { return heights_[i] - heights_[i - 1]; }
  /// max(p_{i-1}, p_i)
  int step_height(int i) const {
    return std::max(heights_[i - 1], heights_[i]);
  }
  int endpoint() const { return heights_.back(); }
  std::vector<int> ups() const;
  std::vector<int> downs() const;

  friend bool operator==(const BallotPath&, const BallotPath&) = default;

 private:
  std::vector<int> heights_;
};

/// UP = first row, DOWN = second row.
BallotPath path_of_tableau(const TwoRowTableau& t);
TwoRowTableau tableau_of_path(const BallotPath& p);

struct UnstablePart {
  /// Every down-step j matched to the last earlier step at the same step
  /// height; labels are the original step indices.
  std::vector<Chord> chords;
  /// Up-steps left unmatched, ascending; their count is the endpoint height.
  std::vector<int> stable;
};

UnstablePart unstable_matching_of_path(const BallotPath& p);

/// Inverse of `forward`: places `core` order-preservingly on the stable
/// steps of the tableau's path and fills the rest with the path's unstable
/// chords. Throws MatchingError when `core` has a short chord or its size
/// is not n - 2k.
Matching inverse(const Matching& core, const TwoRowTableau& t);

}  // namespace matchsym
