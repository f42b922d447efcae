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

#include "matchsym/bessel.hpp"

#include <limits>
#include <stdexcept>

namespace matchsym {
namespace {

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  return i >= 0 && i <= degree() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1 || i == 0) out += c.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<std::int64_t> IntPolynomial::to_int64() const {
  std::vector<std::int64_t> out;
  for (const BigInt& c : coeffs_) {
    if (c > std::numeric_limits<std::int64_t>::max() ||
        c < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("coefficient " + c.str() +
                                " does not fit in 64 bits");
    }
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

IntPolynomial bessel_theta(int n) {
  if (n < 0) throw std::invalid_argument("theta_n needs n >= 0");
  std::vector<BigInt> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    const BigInt num = factorial(2 * n - k);
    const BigInt den = factorial(k) * factorial(n - k) * (BigInt(1) << (n - k));
    const BigInt rem = num % den;
    if (rem != 0) {
      throw std::logic_error("theta coefficient is not an integer");
    }
    c[k] = num / den;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial shift_expand(const IntPolynomial& p, const BigInt& a) {
  // p(x + a) = sum_j p_j sum_i C(j,i) a^(j-i) x^i
  const int d = p.degree();
  std::vector<BigInt> out(d + 1 > 0 ? d + 1 : 0);
  std::vector<BigInt> powers(d + 1 > 0 ? d + 1 : 0);
  if (d >= 0) powers[0] = 1;
  for (int e = 1; e <= d; ++e) powers[e] = powers[e - 1] * a;
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i <= j; ++i) {
      out[i] += p.coefficients()[j] * binomial(j, i) * powers[j - i];
    }
  }
  return IntPolynomial(std::move(out));
}

std::vector<std::int64_t> short_chord_distribution(int n,
                                                   const Workers& workers) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const std::vector<Matching> all = enumerate_matchings(2 * n, 0);
  return parallel_reduce<std::vector<std::int64_t>>(
      all.size(), workers,
      [n] { return std::vector<std::int64_t>(n + 1, 0); },
      [&](std::vector<std::int64_t>& h, std::size_t i) {
        ++h[short_set(all[i]).size()];
      },
      [](std::vector<std::int64_t>& acc, std::vector<std::int64_t>&& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
}

std::vector<std::int64_t> short_chord_distribution_via_bessel(int n) {
  std::vector<std::int64_t> h = shift_expand(bessel_theta(n), -1).to_int64();
  h.resize(n + 1, 0);
  return h;
}

std::vector<std::int64_t> schur_coeffs_via_bessel(int n, int f) {
  if (f < 0 || f > n || (n - f) % 2 != 0) {
    throw std::invalid_argument("need 0 <= f <= N with N - f even, got N=" +
                                std::to_string(n) + " f=" + std::to_string(f));
  }
  const int half = (n - f) / 2;
  std::vector<std::int64_t> out;
  for (int k = 0; k <= half; ++k) {
    const IntPolynomial h = shift_expand(bessel_theta(half + f - k), -1);
    out.push_back(static_cast<std::int64_t>(h.coefficient(f)));
  }
  return out;
}

Matching collapse_short_chords(const Matching& m) {
  if (!m.is_perfect()) {
    throw MatchingError("collapse_short_chords: " + m.to_string() +
                        " is not perfect");
  }
  const int n = m.n();
  // New label of each surviving vertex; the closer of a short chord is
  // dropped and its opener becomes a singleton.
  std::vector<int> label(n + 1, 0);
  int next = 0;
  for (int v = 1; v <= n; ++v) {
    if (v > 1 && m.mate(v) == v - 1) continue;
    label[v] = ++next;
  }
  std::vector<Chord> chords;
  std::vector<int> singles;
  for (int v = 1; v <= n; ++v) {
    const int w = m.mate(v);
    if (w == v + 1) {
      singles.push_back(label[v]);
    } else if (w > v) {
      chords.push_back({label[v], label[w]});
    }
  }
  return Matching::from_blocks(next, chords, singles);
}

Matching expand_singletons(const Matching& m) {
  const int n = m.n();
  std::vector<int> label(n + 1, 0);
  int next = 0;
  for (int v = 1; v <= n; ++v) {
    label[v] = ++next;
    if (m.is_singleton(v)) ++next;
  }
  std::vector<Chord> chords;
  for (int v = 1; v <= n; ++v) {
    const int w = m.mate(v);
    if (w == 0) {
      chords.push_back({label[v], label[v] + 1});
    } else if (w > v) {
      chords.push_back({label[v], label[w]});
    }
  }
  return Matching::from_chords(next, chords);
}

}  // namespace matchsym
