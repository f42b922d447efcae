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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchsym/statset.hpp"

namespace matchsym {

/// Dense vectors are materialized up to this ambient size (2^19 entries).
inline constexpr int kMaxDescentVectorN = 20;

/// The multiset {D(a) : a in A} of subsets of [N-1], kept as a dense count
/// table indexed by bitmask.
///
/// This is the finite stand-in for the quasisymmetric generating function
/// sum_a F_{D(a)}: two sets have the same generating function exactly when
/// their descent vectors agree. Counts are signed so that residuals of the
/// Schur extraction can be represented.
class DescentVector {
 public:
  DescentVector() : DescentVector(0) {}
  explicit DescentVector(int n);

  int n() const { return n_; }
  std::int64_t count(std::uint64_t mask) const { return counts_[mask]; }
  std::int64_t count(const StatSet& s) const { return counts_[s.mask()]; }
  std::span<const std::int64_t> counts() const { return counts_; }

  void add(std::uint64_t mask, std::int64_t times = 1) {
    counts_[mask] += times;
  }
  void add(const StatSet& s, std::int64_t times = 1);
  /// this += factor * other
  void add_scaled(const DescentVector& other, std::int64_t factor);

  /// Sum of all counts (the number of underlying objects).
  std::int64_t total() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  /// (mask, count) for every nonzero entry, by increasing mask.
  std::vector<std::pair<std::uint64_t, std::int64_t>> support() const;

  /// "{2}:1 {1,3}:1" listing of the nonzero entries.
  std::string to_string() const;

  DescentVector& operator+=(const DescentVector& other) {
    add_scaled(other, 1);
    return *this;
  }
  friend bool operator==(const DescentVector&, const DescentVector&) = default;

 private:
  int n_;
  std::vector<std::int64_t> counts_;
};

}  // namespace matchsym
