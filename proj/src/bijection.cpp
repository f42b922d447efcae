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

#include "matchsym/bijection.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace matchsym {

ReductionResult reduce_with(
    const Matching& m, const std::function<std::size_t(std::size_t)>& pick) {
  const int n = m.n();
  // Doubly linked list over 0..n+1 with sentinels at both ends.
  std::vector<int> next(n + 2), prev(n + 2);
  for (int v = 0; v <= n + 1; ++v) {
    next[v] = v + 1;
    prev[v] = v - 1;
  }
  std::vector<bool> alive(n + 2, true);
  ReductionResult out;
  std::vector<int> candidates;
  while (true) {
    candidates.clear();
    for (int v = next[0]; v <= n; v = next[v]) {
      const int w = m.mate(v);
      if (w > v && next[v] == w) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    const std::size_t choice = pick(candidates.size());
    if (choice >= candidates.size()) {
      throw std::out_of_range("reduce_with: pick returned an invalid index");
    }
    const int a = candidates[choice];
    const int b = m.mate(a);
    // b == next[a], so unlinking the pair is a single splice.
    next[prev[a]] = next[b];
    prev[next[b]] = prev[a];
    alive[a] = alive[b] = false;
    out.unstable_chords.push_back({a, b});
  }
  for (int v = 1; v <= n; ++v) {
    if (alive[v]) out.stable.push_back(v);
  }
  out.core = restrict(m, out.stable);
  return out;
}

ReductionResult reduce(const Matching& m) {
  return reduce_with(m, [](std::size_t) { return std::size_t{0}; });
}

ReductionResult reduce_random(const Matching& m, std::mt19937_64& rng) {
  return reduce_with(m, [&](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  });
}

Matching core(const Matching& m) { return reduce(m).core; }

// ---------------------------------------------------------------------------
// Two-row tableaux

TwoRowTableau::TwoRowTableau(int n, std::uint64_t second_row)
    : n_(n), row2_(second_row) {
  if (n < 0 || n > kMaxAmbient) {
    throw std::invalid_argument("tableau size outside [0, 64]");
  }
  if (n < 64 && (second_row >> n) != 0) {
    throw std::invalid_argument("second row has entries above n");
  }
  int balance = 0;
  for (int v = 1; v <= n; ++v) {
    balance += ((row2_ >> (v - 1)) & 1u) ? -1 : 1;
    if (balance < 0) {
      throw std::invalid_argument("entry " + std::to_string(v) +
                                  " would sit below a larger or empty cell");
    }
  }
}

TwoRowTableau TwoRowTableau::from_second_row(int n,
                                             const std::vector<int>& row) {
  std::uint64_t mask = 0;
  for (int v : row) {
    if (v < 1 || v > n || ((mask >> (v - 1)) & 1u)) {
      throw std::invalid_argument("invalid second-row entry " +
                                  std::to_string(v));
    }
    mask |= std::uint64_t{1} << (v - 1);
  }
  return TwoRowTableau(n, mask);
}

TwoRowTableau TwoRowTableau::from_syt(const Syt& t) {
  if (t.rows().size() > 2) {
    throw std::invalid_argument("tableau has more than two rows");
  }
  return from_second_row(t.size(), t.rows().size() == 2 ? t.rows()[1]
                                                        : std::vector<int>{});
}

TwoRowTableau TwoRowTableau::parse(int n, const std::string& second_row) {
  std::vector<int> row;
  std::string token;
  std::stringstream in(second_row);
  while (std::getline(in, token, ',')) {
    std::size_t a = token.find_first_not_of(" {}");
    std::size_t b = token.find_last_not_of(" {}");
    if (a == std::string::npos) continue;
    token = token.substr(a, b - a + 1);
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) {
      throw std::invalid_argument("bad tableau entry '" + token + "'");
    }
    row.push_back(v);
  }
  return from_second_row(n, row);
}

std::vector<int> TwoRowTableau::first_row() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (!((row2_ >> (v - 1)) & 1u)) out.push_back(v);
  }
  return out;
}

std::vector<int> TwoRowTableau::second_row() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if ((row2_ >> (v - 1)) & 1u) out.push_back(v);
  }
  return out;
}

Syt TwoRowTableau::to_syt() const {
  std::vector<std::vector<int>> rows{first_row()};
  if (k() > 0) rows.push_back(second_row());
  return Syt(std::move(rows));
}

StatSet TwoRowTableau::descent_set() const {
  // i is a descent iff i is in the first row and i+1 in the second.
  const std::uint64_t row1 = ~row2_;
  return StatSet(n_, (row1 & (row2_ >> 1)) & full_mask(n_));
}

namespace {

void two_row_rec(int n, int k, int v, int in1, int in2, std::uint64_t mask,
                 std::vector<TwoRowTableau>& out) {
  if (v > n) {
    out.emplace_back(n, mask);
    return;
  }
  if (in1 < n - k) two_row_rec(n, k, v + 1, in1 + 1, in2, mask, out);
  if (in2 < k && in2 < in1) {
    two_row_rec(n, k, v + 1, in1, in2 + 1,
                mask | (std::uint64_t{1} << (v - 1)), out);
  }
}

}  // namespace

std::vector<TwoRowTableau> enumerate_two_row_tableaux(int n, int k) {
  std::vector<TwoRowTableau> out;
  if (k < 0 || 2 * k > n) return out;
  two_row_rec(n, k, 1, 0, 0, 0, out);
  return out;
}

TwoRowTableau tableau_of(const Matching& m) {
  std::uint64_t mask = 0;
  for (const Chord& c : reduce(m).unstable_chords) {
    mask |= std::uint64_t{1} << (c.close - 1);
  }
  return TwoRowTableau(m.n(), mask);
}

BijectionImage forward(const Matching& m) {
  ReductionResult r = reduce(m);
  std::uint64_t mask = 0;
  for (const Chord& c : r.unstable_chords) {
    mask |= std::uint64_t{1} << (c.close - 1);
  }
  return {std::move(r.core), TwoRowTableau(m.n(), mask)};
}

// ---------------------------------------------------------------------------
// Ballot paths

BallotPath::BallotPath(const std::vector<int>& steps) : heights_{0} {
  for (int s : steps) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("ballot path steps must be +1 or -1");
    }
    const int h = heights_.back() + s;
    if (h < 0) {
      throw std::invalid_argument("ballot path dips below the axis at step " +
                                  std::to_string(heights_.size()));
    }
    heights_.push_back(h);
  }
}

std::vector<int> BallotPath::ups() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i) {
    if (step(i) > 0) out.push_back(i);
  }
  return out;
}

std::vector<int> BallotPath::downs() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i) {
    if (step(i) < 0) out.push_back(i);
  }
  return out;
}

BallotPath path_of_tableau(const TwoRowTableau& t) {
  std::vector<int> steps(t.n());
  for (int v = 1; v <= t.n(); ++v) {
    steps[v - 1] = ((t.second_row_mask() >> (v - 1)) & 1u) ? -1 : 1;
  }
  // A valid tableau never has more second-row than first-row entries in a
  // prefix, so the constructor's axis check cannot fire.
  return BallotPath(steps);
}

TwoRowTableau tableau_of_path(const BallotPath& p) {
  std::uint64_t mask = 0;
  for (int j : p.downs()) mask |= std::uint64_t{1} << (j - 1);
  return TwoRowTableau(p.length(), mask);
}

UnstablePart unstable_matching_of_path(const BallotPath& p) {
  const int n = p.length();
  UnstablePart out;
  // last_at[h]: most recent step seen with step height h.
  std::vector<int> last_at(n + 2, 0);
  std::vector<bool> matched(n + 1, false);
  for (int j = 1; j <= n; ++j) {
    const int h = p.step_height(j);
    if (p.step(j) < 0) {
      const int i = last_at[h];
      assert(i > 0 && p.step(i) > 0 && !matched[i]);
      matched[i] = matched[j] = true;
      out.chords.push_back({i, j});
    }
    last_at[h] = j;
  }
  for (int i = 1; i <= n; ++i) {
    if (!matched[i]) out.stable.push_back(i);
  }
  return out;
}

Matching inverse(const Matching& core, const TwoRowTableau& t) {
  if (!short_set(core).empty()) {
    throw MatchingError("inverse: core " + core.to_string() +
                        " has a short chord");
  }
  if (core.n() != t.n() - 2 * t.k()) {
    throw MatchingError("inverse: core on " + std::to_string(core.n()) +
                        " vertices does not fit a tableau of shape " +
                        t.shape().to_string());
  }
  const UnstablePart part = unstable_matching_of_path(path_of_tableau(t));
  const std::vector<int> rest = complement_of(t.n(), part.stable);
  std::vector<int> index(t.n() + 1, 0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    index[rest[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Chord> relabeled;
  for (const Chord& c : part.chords) {
    relabeled.push_back({index[c.open], index[c.close]});
  }
  const Matching outer =
      Matching::from_chords(static_cast<int>(rest.size()), relabeled);
  return combine(t.n(), part.stable, core, outer);
}

}  // namespace matchsym
