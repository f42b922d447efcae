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
#include "matchsym/bessel.hpp"
#include "matchsym/symfunc.hpp"

using namespace matchsym;

namespace {

IntPolynomial poly(std::vector<int> c) {
  std::vector<BigInt> out(c.begin(), c.end());
  return IntPolynomial(std::move(out));
}

std::int64_t count_short_free(int n, int f) {
  std::int64_t count = 0;
  for_each_matching(n, f, [&](const Matching& m) {
    if (short_set(m).empty()) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("bessel polynomials") {
  CHECK(bessel_theta(0) == poly({1}));
  CHECK(bessel_theta(2) == poly({3, 3, 1}));
  CHECK(bessel_theta(3) == poly({15, 15, 6, 1}));
  CHECK(bessel_theta(3).to_string() == "x^3 + 6x^2 + 15x + 15");
  CHECK(bessel_theta(1).to_string() == "x + 1");
  // theta_n(1) matches the known sequence 1, 2, 7, 37, 266, 2431.
  const std::vector<int> at_one{1, 2, 7, 37, 266, 2431};
  for (int n = 0; n < 6; ++n) CHECK(bessel_theta(n).evaluate(1) == at_one[n]);
  // Large n stays exact: constant term is (2n)!/(n! 2^n) = (2n-1)!!.
  BigInt df = 1;
  for (int k = 1; k < 2 * 40; k += 2) df *= k;
  CHECK(bessel_theta(40).coefficient(0) == df);
  CHECK(bessel_theta(40).coefficient(40) == 1);
}

TEST_CASE("polynomial basics") {
  CHECK(IntPolynomial(std::vector<BigInt>{0, 0}).is_zero());
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(poly({1, 0, 2}).degree() == 2);
  CHECK(poly({-1, 0, -2}).to_string() == "-2x^2 - 1");
  CHECK(poly({5, 6, 3, 1}).to_int64() == std::vector<std::int64_t>{5, 6, 3, 1});
}

TEST_CASE("shift expansion") {
  CHECK(shift_expand(bessel_theta(2), -1) == poly({1, 1, 1}));
  CHECK(shift_expand(bessel_theta(3), -1) == poly({5, 6, 3, 1}));
  const IntPolynomial p = poly({4, -2, 0, 7});
  CHECK(shift_expand(p, 0) == p);
  CHECK(shift_expand(shift_expand(p, 3), -3) == p);
  for (int x = -3; x <= 3; ++x) {
    CHECK(shift_expand(p, 2).evaluate(x) == p.evaluate(x + 2));
  }
}

TEST_CASE("short chord distributions") {
  CHECK(short_chord_distribution(2) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(short_chord_distribution(0) == std::vector<std::int64_t>{1});
  CHECK(short_chord_distribution(3) == std::vector<std::int64_t>{5, 6, 3, 1});
  for (int n = 0; n <= 6; ++n) {
    const auto h = short_chord_distribution(n, Workers(2));
    CHECK(h == short_chord_distribution_via_bessel(n));
    std::int64_t total = 0;
    for (auto x : h) total += x;
    CHECK(static_cast<std::uint64_t>(total) == double_factorial_odd(2 * n));
    for (int i = 0; i <= n; ++i) {
      CHECK(h[i] == count_short_free(2 * n - i, i));
    }
  }
}

TEST_CASE("schur coefficients from bessel polynomials") {
  CHECK(schur_coeffs_via_bessel(6, 0) == std::vector<std::int64_t>{5, 1, 0, 1});
  CHECK(schur_coeffs_via_bessel(3, 1) == std::vector<std::int64_t>{1, 1});
  CHECK(schur_coeffs_via_bessel(0, 0) == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(schur_coeffs_via_bessel(5, 0), std::invalid_argument);
  for (int n = 0; n <= 10; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const auto c = schur_coeffs_via_bessel(n, f);
      const auto e = schur_expand(
          descent_vector(enumerate_matchings(n, f), short_set, n));
      REQUIRE(e);
      CHECK(*e == two_row_expansion(n, c));
    }
  }
}

TEST_CASE("collapsing short chords") {
  const Matching m = Matching::parse("{(1,2),(3,6),(4,5)}");
  CHECK_THROWS_AS(collapse_short_chords(Matching::parse("{(1,2),(3)}")),
                  MatchingError);
  CHECK(collapse_short_chords(m).to_string() == "{(1),(2,4),(3)}");
  for (int n = 0; n <= 5; ++n) {
    for (int i = 0; i <= n; ++i) {
      std::size_t hits = 0;
      for_each_matching(2 * n, 0, [&](const Matching& p) {
        if (short_set(p).size() != i) return;
        const Matching c = collapse_short_chords(p);
        CHECK(c.n() == 2 * n - i);
        CHECK(c.num_singletons() == i);
        CHECK(short_set(c).empty());
        CHECK(expand_singletons(c) == p);
        ++hits;
      });
      CHECK(static_cast<std::int64_t>(hits) == count_short_free(2 * n - i, i));
    }
  }
}
