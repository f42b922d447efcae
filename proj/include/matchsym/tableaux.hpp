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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchsym/descent_vector.hpp"
#include "matchsym/parallel.hpp"
#include "matchsym/statset.hpp"

namespace matchsym {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  /// Accepts "4,2,2,1", "(4,2,2,1)", "4 2 2 1"; "()" or "" is empty.
  static Partition parse(std::string_view text);
  static Partition two_row(int n, int k);
  /// (n-k, 1^k)
  static Partition hook(int n, int k);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  /// Column lengths lambda'_1 >= lambda'_2 >= ...
  Partition conjugate() const;
  bool is_two_row() const { return length() <= 2; }
  bool is_hook() const { return length() <= 1 || parts_[1] == 1; }

  /// "(4,2,2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; use conjugate_cmp for the conjugate order.
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Sequence of positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  /// Rearrangement equivalence.
  bool equivalent(const Composition& other) const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// {i_1 < ... < i_l} -> (i_1, i_2 - i_1, ..., N - i_l)
Composition composition_of_set(const StatSet& s);
/// Partial sums of all parts but the last.
StatSet set_of_composition(const Composition& alpha);

/// Compares the column-length sequences lexicographically. Throws
/// std::invalid_argument on a weight mismatch.
std::strong_ordering conjugate_cmp(const Partition& a, const Partition& b);

/// All partitions of n, largest first in the conjugate order (so (1^n)
/// leads and (n) closes the list).
std::vector<Partition> partitions_of(int n);

/// A standard Young tableau in English notation.
class Syt {
 public:
  /// Validates shape, strictly increasing rows and columns, entries 1..N.
  explicit Syt(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.weight(); }
  /// 0-based row holding `entry`.
  int row_of(int entry) const;
  /// Entry at 0-based (row, column).
  int at(int row, int column) const { return rows_[row][column]; }

  /// Rows separated by '/', entries by ',': "1,3,4,5/2".
  std::string to_string() const;

  friend bool operator==(const Syt&, const Syt&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_index_;
};

/// {i : i+1 lies in a strictly lower row than i}.
StatSet descent_set(const Syt& t);

/// Number of SYT of the shape by the hook-length formula.
std::uint64_t hook_length_count(const Partition& shape);

/// Visits every SYT of `shape` by placing 1..N one cell at a time, trying
/// rows top to bottom.
void for_each_syt(const Partition& shape,
                  const std::function<void(const Syt&)>& visit);
std::vector<Syt> enumerate_syt(const Partition& shape);

/// Column superstandard tableau: columns filled top to bottom, left to right.
Syt superstandard(const Partition& shape);
/// [N-1] minus the partial sums of the column lengths.
StatSet superstandard_descent_set(const Partition& shape);

/// Computes {Des(T) : T in Syt(shape)} by backtracking, without the cache.
DescentVector compute_descent_vector_of_shape(const Partition& shape);

/// Raised when the on-disk cache cannot be created or written.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memoizes descent vectors of shapes in memory and, when a directory is
/// configured, on disk as one text file per shape.
///
/// File layout: a header line `# shape N=<N> parts=<p1,p2,...>` followed by
/// `bitmask count` lines for every nonzero entry in increasing bitmask
/// order. Files are written to a temporary name and renamed into place.
class ShapeVectorCache {
 public:
  ShapeVectorCache() = default;

  /// Creates the directory if needed; throws CacheError when it cannot be
  /// created or is not writable. An empty path disables disk caching.
  void set_directory(const std::filesystem::path& dir);
  const std::optional<std::filesystem::path>& directory() const {
    return dir_;
  }

  const DescentVector& get(const Partition& shape);
  /// Fills the cache for every partition of n, shape-parallel.
  void precompute(int n, const Workers& workers);
  void clear_memory();

  std::filesystem::path file_for(const Partition& shape) const;

 private:
  std::optional<DescentVector> load(const Partition& shape) const;
  void store(const Partition& shape, const DescentVector& v) const;

  std::mutex mutex_;
  std::optional<std::filesystem::path> dir_;
  std::map<Partition, std::shared_ptr<const DescentVector>> memory_;
};

/// Process-wide cache; its directory defaults to $MATCHSYM_CACHE_DIR when
/// that variable is set.
ShapeVectorCache& shape_cache();

/// {Des(T) : T in Syt(shape)} through the process-wide cache.
const DescentVector& descent_vector_of_shape(const Partition& shape);

}  // namespace matchsym
