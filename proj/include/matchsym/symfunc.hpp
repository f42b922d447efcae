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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchsym/descent_vector.hpp"
#include "matchsym/parallel.hpp"
#include "matchsym/statset.hpp"
#include "matchsym/tableaux.hpp"

namespace matchsym {

/// Integer combination sum c_lambda s_lambda over partitions of N. Only
/// nonzero coefficients are stored, ordered by decreasing parts
/// lexicographically, so (N) comes first.
class SchurExpansion {
 public:
  struct Term {
    Partition shape;
    std::int64_t coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit SchurExpansion(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coefficient(const Partition& shape) const;
  /// Adds to the coefficient of `shape`, dropping the term if it hits zero.
  void add(const Partition& shape, std::int64_t c);

  bool is_zero() const { return terms_.empty(); }
  bool is_schur_positive() const;
  bool only_two_row() const;
  bool only_hooks() const;
  /// sum c_lambda f^lambda
  std::int64_t dimension() const;
  /// sum c_lambda Des(Syt(lambda)), rebuilt from the shape vectors.
  DescentVector descent_vector() const;

  /// "5 s(6) + s(5,1) + s(3,3)"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const SchurExpansion&,
                         const SchurExpansion&) = default;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// counts[J] = |{a : stat(a) = J}|. Throws std::out_of_range when a
/// statistic has the wrong ambient size.
template <typename Item, typename Stat>
DescentVector descent_vector(std::span<const Item> items, Stat stat, int n,
                             const Workers& workers = Workers::serial()) {
  return parallel_reduce<DescentVector>(
      items.size(), workers, [n] { return DescentVector(n); },
      [&](DescentVector& acc, std::size_t i) {
        const StatSet s = stat(items[i]);
        if (s.n() != n) {
          throw std::out_of_range("statistic value " + s.to_string() +
                                  " is not a subset of [" +
                                  std::to_string(n - 1) + "]");
        }
        acc.add(s.mask());
      },
      [](DescentVector& acc, DescentVector&& part) { acc += part; });
}

template <typename Item, typename Stat>
DescentVector descent_vector(const std::vector<Item>& items, Stat stat, int n,
                             const Workers& workers = Workers::serial()) {
  return descent_vector(std::span<const Item>(items), stat, n, workers);
}

/// Moves every count from J to [N-1] \ J.
DescentVector complement_vector(const DescentVector& v);

/// Sum over all J contained in each subset; out[S] = sum_{J ⊆ S} v[J].
std::vector<std::int64_t> subset_sums(const DescentVector& v);
/// out[S] = sum_{J ⊇ S} v[J].
std::vector<std::int64_t> superset_sums(const DescentVector& v);

/// Composition test: |A(alpha)| = |A(beta)| for all rearrangement-equivalent
/// compositions, with A(alpha) = {a : D(a) ⊆ S_alpha}.
bool is_symmetric_by_compositions(const DescentVector& v);

/// Triangular extraction of Schur coefficients. Returns std::nullopt when
/// the vector is not a combination of shape vectors (not symmetric).
std::optional<SchurExpansion> schur_expand(const DescentVector& v);

/// Outcome of the two-row and hook criteria: `coefficients[k]` is the
/// coefficient of s_{N-k,k} (two-row) or s_{N-k,1^k} (hook).
struct CriterionResult {
  bool holds = false;
  std::vector<std::int64_t> coefficients;
};

/// Sparse criterion: every value sparse and |{a : D(a) ⊇ J}| constant over
/// sparse J of each size. Coefficients are |{a : D(a) = odds(k)}| for
/// k = 0..floor(N/2), reported whether or not the criterion holds.
CriterionResult sparse_criterion(const DescentVector& v);
/// Hook criterion: |{a : D(a) = J}| depends only on |J|. Coefficients are
/// the counts at [k] for k = 0..max(N-1, 0).
CriterionResult hook_criterion(const DescentVector& v);

template <typename Item, typename Stat>
CriterionResult sparse_criterion(const std::vector<Item>& items, Stat stat,
                                 int n) {
  return sparse_criterion(descent_vector(items, stat, n));
}

template <typename Item, typename Stat>
CriterionResult hook_criterion(const std::vector<Item>& items, Stat stat,
                               int n) {
  return hook_criterion(descent_vector(items, stat, n));
}

/// sum_k c_k s_{N-k,k}
SchurExpansion two_row_expansion(int n, std::span<const std::int64_t> c);
/// sum_k c_k s_{N-k,1^k}
SchurExpansion hook_expansion(int n, std::span<const std::int64_t> c);

}  // namespace matchsym
