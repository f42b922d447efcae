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

// Bessel polynomials and the distribution of short chords over perfect
// matchings.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matchsym/matching.hpp"
#include "matchsym/parallel.hpp"

namespace matchsym {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial, coefficient i at degree i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int i) const;
  BigInt evaluate(const BigInt& x) const;

  /// "x^3 + 6x^2 + 15x + 15"; "0" when zero.
  std::string to_string() const;
  /// Coefficients cast to int64; throws std::overflow_error if one does
  /// not fit.
  std::vector<std::int64_t> to_int64() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// theta_n(x) = sum_k (2n-k)! / (k! (n-k)! 2^(n-k)) x^k.
IntPolynomial bessel_theta(int n);

/// p(x + a).
IntPolynomial shift_expand(const IntPolynomial& p, const BigInt& a);

/// h[i] = number of perfect matchings on 2n vertices with i short chords,
/// by enumeration.
std::vector<std::int64_t> short_chord_distribution(
    int n, const Workers& workers = Workers::serial());

/// Same numbers from theta_n(x - 1).
std::vector<std::int64_t> short_chord_distribution_via_bessel(int n);

/// c_k = h(P_{N+f-2k}, f) for k = 0..(N-f)/2. Throws std::invalid_argument
/// unless 0 <= f <= N and N - f is even.
std::vector<std::int64_t> schur_coeffs_via_bessel(int n, int f);

/// Replaces each short chord of a perfect matching by one unmatched vertex.
/// The image has no short chords. Throws MatchingError on non-perfect input.
Matching collapse_short_chords(const Matching& m);
/// Inverse: each unmatched vertex becomes a short chord.
Matching expand_singletons(const Matching& m);

}  // namespace matchsym
