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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchsym {

/// Largest ambient size for which subsets of [N-1] fit in one machine word.
inline constexpr int kMaxAmbient = 64;

/// Subset of [N-1] stored as a bitmask; element i lives in bit i-1.
///
/// This is the value type of every set-valued statistic in the library:
/// short chords of a matching, descent sets of tableaux, odds(k), and the
/// Asc/Des/Loop statistics on the Schreier graph.
class StatSet {
 public:
  StatSet() = default;
  StatSet(int n, std::uint64_t mask);
  StatSet(int n, std::initializer_list<int> members);

  static StatSet from_members(int n, const std::vector<int>& members);
  /// {1, 3, ..., 2k-1}
  static StatSet odds(int n, int k);
  /// [k] = {1, ..., k}
  static StatSet prefix(int n, int k);
  /// [N-1]
  static StatSet full(int n);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const {
    return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1u);
  }
  std::vector<int> members() const;

  /// No two consecutive integers.
  bool is_sparse() const { return (mask_ & (mask_ >> 1)) == 0; }
  StatSet complement() const;

  /// Space-free set notation, e.g. "{1,3}" or "{}".
  std::string to_string() const;

  friend bool operator==(const StatSet&, const StatSet&) = default;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

/// Bitmask of [N-1]; zero for N <= 1.
std::uint64_t full_mask(int n);

/// Number of subsets of [N-1], i.e. 2^(N-1) (1 for N = 0).
std::size_t subset_count(int n);

}  // namespace matchsym
