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

#include "doctest.h"
#include "matchsym/matching.hpp"
#include "matchsym/symfunc.hpp"

using namespace matchsym;

namespace {

DescentVector short_vector(int n, int f) {
  return descent_vector(enumerate_matchings(n, f), short_set, n);
}

std::int64_t count_short_free(int n, int f) {
  std::int64_t count = 0;
  for_each_matching(n, f, [&](const Matching& m) {
    if (short_set(m).empty()) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("descent vector examples") {
  const DescentVector v40 = short_vector(4, 0);
  CHECK(v40.total() == 3);
  CHECK(v40.count(StatSet(4, {})) == 1);
  CHECK(v40.count(StatSet(4, {2})) == 1);
  CHECK(v40.count(StatSet(4, {1, 3})) == 1);
  const DescentVector v31 = short_vector(3, 1);
  CHECK(v31.total() == 3);
  CHECK(v31.count(StatSet(3, {})) == 1);
  CHECK(v31.count(StatSet(3, {1})) == 1);
  CHECK(v31.count(StatSet(3, {2})) == 1);
  CHECK(descent_vector(std::vector<Matching>{}, short_set, 5).is_zero());
  CHECK_THROWS_AS(descent_vector(enumerate_matchings(4, 0), short_set, 5),
                  std::out_of_range);
  // Worker count does not change the aggregate.
  const auto items = enumerate_matchings(8, 2);
  CHECK(descent_vector(items, short_set, 8, Workers(4)) ==
        descent_vector(items, short_set, 8));
}

TEST_CASE("complement vector") {
  const DescentVector v = short_vector(4, 0);
  const DescentVector c = complement_vector(v);
  CHECK(c.count(StatSet(4, {1, 2, 3})) == 1);
  CHECK(c.count(StatSet(4, {1, 3})) == 1);
  CHECK(c.count(StatSet(4, {2})) == 1);
  CHECK(complement_vector(c) == v);
  CHECK(complement_vector(DescentVector(5)).is_zero());
}

TEST_CASE("composition symmetry") {
  CHECK(is_symmetric_by_compositions(short_vector(4, 0)));
  DescentVector single(3);
  single.add(StatSet(3, {1}));
  CHECK_FALSE(is_symmetric_by_compositions(single));
  DescentVector constant(5);
  constant.add(std::uint64_t{0});
  CHECK(is_symmetric_by_compositions(constant));
  // Only the empty and full subsets give a symmetric single term.
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      DescentVector v(n);
      v.add(mask);
      CHECK(is_symmetric_by_compositions(v) ==
            (mask == 0 || mask == full_mask(n)));
    }
  }
}

TEST_CASE("schur expansion examples") {
  const auto e40 = schur_expand(short_vector(4, 0));
  REQUIRE(e40);
  CHECK(e40->to_string() == "s(4) + s(2,2)");
  const auto e31 = schur_expand(short_vector(3, 1));
  REQUIRE(e31);
  CHECK(e31->to_string() == "s(3) + s(2,1)");
  DescentVector single(3);
  single.add(StatSet(3, {1}));
  CHECK_FALSE(schur_expand(single));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const auto e = schur_expand(compute_descent_vector_of_shape(shape));
      REQUIRE(e);
      REQUIRE(e->terms().size() == 1);
      CHECK(e->terms()[0].shape == shape);
      CHECK(e->terms()[0].coefficient == 1);
    }
  }
}

TEST_CASE("signed expansions are exact") {
  SchurExpansion target(5);
  target.add(Partition({3, 2}), 2);
  target.add(Partition({2, 2, 1}), -3);
  target.add(Partition({5}), 1);
  const auto e = schur_expand(target.descent_vector());
  REQUIRE(e);
  CHECK(*e == target);
  CHECK_FALSE(e->is_schur_positive());
  CHECK(e->dimension() == 2 * 5 - 3 * 5 + 1);
}

TEST_CASE("symmetry tests agree") {
  for (int n = 1; n <= 10; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const DescentVector v = short_vector(n, f);
      CHECK(is_symmetric_by_compositions(v) == schur_expand(v).has_value());
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      DescentVector v(n);
      v.add(mask);
      v.add(full_mask(n) & ~mask);
      CHECK(is_symmetric_by_compositions(v) == schur_expand(v).has_value());
    }
  }
}

TEST_CASE("two-row expansion of matchings by short chords") {
  for (int n = 0; n <= 10; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const auto e = schur_expand(short_vector(n, f));
      REQUIRE(e);
      CHECK(e->only_two_row());
      std::vector<std::int64_t> c;
      for (int k = 0; 2 * k <= n - f; ++k) {
        c.push_back(count_short_free(n - 2 * k, f));
      }
      CHECK(*e == two_row_expansion(n, c));
    }
  }
}

TEST_CASE("sparse criterion") {
  const auto r = sparse_criterion(enumerate_matchings(6, 0), short_set, 6);
  CHECK(r.holds);
  CHECK(r.coefficients == std::vector<std::int64_t>{5, 1, 0, 1});
  std::vector<int> items(7);
  const auto empty =
      sparse_criterion(items, [](int) { return StatSet(5, {}); }, 5);
  CHECK(empty.holds);
  CHECK(empty.coefficients == std::vector<std::int64_t>{7, 0, 0});
  const auto dense = sparse_criterion(
      std::vector<int>{0}, [](int) { return StatSet(4, {1, 2}); }, 4);
  CHECK_FALSE(dense.holds);
  for (int n = 1; n <= 10; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const DescentVector v = short_vector(n, f);
      const auto s = sparse_criterion(v);
      CHECK(s.holds);
      const auto e = schur_expand(v);
      REQUIRE(e);
      for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
        CHECK(s.coefficients[k] ==
              e->coefficient(Partition::two_row(n, static_cast<int>(k))));
      }
    }
  }
}

TEST_CASE("complement conjugates shapes") {
  for (int n = 1; n <= 8; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const DescentVector v = short_vector(n, f);
      const auto e = schur_expand(v);
      const auto ec = schur_expand(complement_vector(v));
      REQUIRE(e);
      REQUIRE(ec);
      for (const auto& t : e->terms()) {
        CHECK(ec->coefficient(t.shape.conjugate()) == t.coefficient);
      }
      CHECK(ec->terms().size() == e->terms().size());
    }
  }
}

TEST_CASE("hook criterion") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::uint64_t> subsets(subset_count(n));
    for (std::uint64_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
    const auto r = hook_criterion(
        subsets, [n](std::uint64_t s) { return StatSet(n, s); }, n);
    CHECK(r.holds);
    CHECK(r.coefficients == std::vector<std::int64_t>(n, 1));
  }
  const auto trivial = hook_criterion(
      std::vector<int>{1, 2}, [](int) { return StatSet(4, {}); }, 4);
  CHECK(trivial.holds);
  CHECK_FALSE(hook_criterion(short_vector(4, 0)).holds);
  // Synthetic hook sums round-trip through extraction.
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::int64_t> c;
    for (int k = 0; k < n; ++k) c.push_back((k * 7 + 3) % 4);
    const SchurExpansion target = hook_expansion(n, c);
    const DescentVector v = target.descent_vector();
    const auto r = hook_criterion(v);
    CHECK(r.holds);
    CHECK(r.coefficients == c);
    const auto e = schur_expand(v);
    REQUIRE(e);
    CHECK(*e == target);
  }
}
