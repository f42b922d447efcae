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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matchsym/statset.hpp"

namespace matchsym {

/// Raised when a block structure does not describe a matching, or when an
/// operation's precondition on its matching arguments fails.
class MatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; `position()` is the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A chord (open, close) with open < close; vertices are 1-based.
struct Chord {
  int open = 0;
  int close = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// A matching on [n]: a partition of {1..n} into blocks of size one
/// (unmatched vertices) or two (chords).
///
/// Stored as a mate table, which is already a canonical form, so equality
/// and hashing are structural. The ordering is the order in which
/// `enumerate_matchings` produces matchings: the first vertex whose block
/// differs decides, a chord to a smaller partner sorts before a chord to a
/// larger one, and every chord sorts before leaving the vertex unmatched.
class Matching {
 public:
  /// The empty matching on zero vertices.
  Matching() : mate_(1, 0) {}

  /// Matching on [n] with the given chords; the remaining vertices are
  /// unmatched. Chord endpoints may be given in either order.
  static Matching from_chords(int n, const std::vector<Chord>& chords);
  /// Requires every vertex of [n] to be covered exactly once.
  static Matching from_blocks(int n, const std::vector<Chord>& chords,
                              const std::vector<int>& singletons);
  /// Builds from a 1-based mate table: mate[v] == 0 for unmatched v,
  /// mate[0] ignored. Validates symmetry.
  static Matching from_mates(std::vector<std::uint8_t> mate);
  /// n unmatched vertices.
  static Matching singletons_only(int n);
  /// {(1,2),(3,4),...,(2k-1,2k)}
  static Matching ladder(int k);

  /// Parses `{(1,3),(2,6),(4,5)}`; unmatched vertices are written `(4)`.
  /// Whitespace and `\;` separators are tolerated, blocks may appear in
  /// any order; the vertex set must be exactly [n] for some n.
  static Matching parse(std::string_view text);

  int n() const { return static_cast<int>(mate_.size()) - 1; }
  /// Partner of v, or 0 when v is unmatched.
  int mate(int v) const { return mate_[v]; }
  bool is_singleton(int v) const { return mate_[v] == 0; }
  bool is_perfect() const { return num_singletons() == 0; }
  int num_chords() const { return (n() - num_singletons()) / 2; }
  int num_singletons() const;
  bool has_chord(int i, int j) const {
    return i >= 1 && i <= n() && j >= 1 && j <= n() && mate_[i] == j;
  }

  /// Chords sorted by opener.
  std::vector<Chord> chords() const;
  std::vector<int> singletons() const;
  const std::vector<std::uint8_t>& mates() const { return mate_; }

  /// Blocks sorted by smallest element: `{(1),(2,3)}`, `{}` when n = 0.
  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching& a,
                                          const Matching& b);

 private:
  explicit Matching(std::vector<std::uint8_t> mate) : mate_(std::move(mate)) {}

  std::vector<std::uint8_t> mate_;
};

/// (n - 1)!! for even n, 1 for n <= 0.
std::uint64_t double_factorial_odd(int n);
/// |M_{N,f}| = C(N,f) (N-f-1)!!, zero when N - f is odd or negative.
std::uint64_t count_matchings(int n, int f);

/// Calls `visit` on every matching of M_{N,f} in canonical order. Returns
/// without calling when (N, f) admits no matching.
void for_each_matching(int n, int f,
                       const std::function<void(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(int n, int f);
/// Every matching on [n], grouped by increasing f.
std::vector<Matching> enumerate_all_matchings(int n);

/// {i in [N-1] : (i, i+1) is a chord}.
StatSet short_set(const Matching& m);

/// Interleaving test for two disjoint chords; throws MatchingError when the
/// chords share an endpoint.
bool chords_intersect(Chord a, Chord b);

/// Checks that `subset` (1-based vertices of m) is m-invariant. Returns the
/// empty string on success, otherwise a description naming the chord that
/// crosses the boundary.
std::string invariance_violation(const Matching& m,
                                 const std::vector<int>& subset);

/// Restriction of m to an m-invariant vertex set, re-indexed to
/// 1..|subset| preserving order. Throws MatchingError naming the violating
/// chord when the set is not invariant.
Matching restrict(const Matching& m, const std::vector<int>& subset);

/// The unique matching on [n] whose restriction to `subset` is `inner` and
/// whose restriction to the complement is `outer`.
Matching combine(int n, const std::vector<int>& subset, const Matching& inner,
                 const Matching& outer);

/// Vertices of [n] not in `subset`, ascending.
std::vector<int> complement_of(int n, const std::vector<int>& subset);

}  // namespace matchsym

template <>
struct std::hash<matchsym::Matching> {
  std::size_t operator()(const matchsym::Matching& m) const noexcept;
};
