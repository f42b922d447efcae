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

#include "matchsym/matching.hpp"

#include <algorithm>
#include <cctype>

namespace matchsym {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

std::string chord_text(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_size(int n) {
  if (n < 0 || n > kMaxAmbient) {
    throw MatchingError("matching size " + std::to_string(n) +
                        " outside [0, 64]");
  }
}

}  // namespace

Matching Matching::from_chords(int n, const std::vector<Chord>& chords) {
  check_size(n);
  std::vector<std::uint8_t> mate(n + 1, 0);
  for (const auto& [a, b] : chords) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      throw MatchingError("invalid chord " + chord_text(a, b) + " on [" +
                          std::to_string(n) + "]");
    }
    if (mate[a] != 0 || mate[b] != 0) {
      throw MatchingError("chord " + chord_text(a, b) +
                          " shares an endpoint with another chord");
    }
    mate[a] = static_cast<std::uint8_t>(b);
    mate[b] = static_cast<std::uint8_t>(a);
  }
  return Matching(std::move(mate));
}

Matching Matching::from_blocks(int n, const std::vector<Chord>& chords,
                               const std::vector<int>& singletons) {
  Matching m = from_chords(n, chords);
  std::vector<bool> seen(n + 1, false);
  for (int v : singletons) {
    if (v < 1 || v > n || !m.is_singleton(v) || seen[v]) {
      throw MatchingError("vertex " + std::to_string(v) +
                          " is not a free vertex of [" + std::to_string(n) +
                          "]");
    }
    seen[v] = true;
  }
  if (static_cast<int>(singletons.size()) != m.num_singletons()) {
    throw MatchingError("blocks do not cover [" + std::to_string(n) + "]");
  }
  return m;
}

Matching Matching::from_mates(std::vector<std::uint8_t> mate) {
  if (mate.empty()) mate.push_back(0);
  const int n = static_cast<int>(mate.size()) - 1;
  check_size(n);
  mate[0] = 0;
  for (int v = 1; v <= n; ++v) {
    const int w = mate[v];
    if (w == 0) continue;
    if (w > n || w == v || mate[w] != v) {
      throw MatchingError("mate table is not an involution at vertex " +
                          std::to_string(v));
    }
  }
  return Matching(std::move(mate));
}

Matching Matching::singletons_only(int n) {
  check_size(n);
  return Matching(std::vector<std::uint8_t>(n + 1, 0));
}

Matching Matching::ladder(int k) {
  std::vector<Chord> chords;
  for (int i = 0; i < k; ++i) chords.push_back({2 * i + 1, 2 * i + 2});
  return from_chords(2 * k, chords);
}

Matching Matching::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '\\' && pos + 1 < text.size() &&
                 text[pos + 1] == ';') {
        pos += 2;
      } else {
        break;
      }
    }
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  std::vector<bool> seen(kMaxAmbient + 1, false);
  auto number = [&] {
    skip();
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxAmbient) throw ParseError("vertex too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a vertex number", pos);
    if (value == 0) throw ParseError("vertices are 1-based", start);
    if (seen[value]) {
      throw ParseError("vertex " + std::to_string(value) + " repeated", start);
    }
    seen[value] = true;
    return static_cast<int>(value);
  };

  std::vector<Chord> chords;
  std::vector<int> singletons;
  std::vector<std::size_t> where;
  expect('{');
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      expect('(');
      where.push_back(pos);
      const int a = number();
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        const int b = number();
        chords.push_back({a, b});
      } else {
        singletons.push_back(a);
      }
      expect(')');
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect('}');
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters", pos);

  int n = 0;
  for (const auto& c : chords) n = std::max({n, c.open, c.close});
  for (int v : singletons) n = std::max(n, v);
  const int covered = static_cast<int>(2 * chords.size() + singletons.size());
  if (covered != n) {
    throw ParseError("blocks must cover exactly 1.." + std::to_string(n),
                     text.size());
  }
  try {
    return from_blocks(n, chords, singletons);
  } catch (const MatchingError& e) {
    throw ParseError(e.what(), 0);
  }
}

int Matching::num_singletons() const {
  int count = 0;
  for (int v = 1; v <= n(); ++v) count += mate_[v] == 0;
  return count;
}

std::vector<Chord> Matching::chords() const {
  std::vector<Chord> out;
  for (int v = 1; v <= n(); ++v) {
    if (mate_[v] > v) out.push_back({v, mate_[v]});
  }
  return out;
}

std::vector<int> Matching::singletons() const {
  std::vector<int> out;
  for (int v = 1; v <= n(); ++v) {
    if (mate_[v] == 0) out.push_back(v);
  }
  return out;
}

std::string Matching::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v = 1; v <= n(); ++v) {
    const int w = mate_[v];
    if (w != 0 && w < v) continue;
    if (!first) out += ',';
    first = false;
    out += w == 0 ? "(" + std::to_string(v) + ")" : chord_text(v, w);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  for (int v = 1; v <= a.n(); ++v) {
    // Unmatched sorts after every chord choice at the same vertex.
    const int ka = a.mate_[v] == 0 ? a.n() + 1 : a.mate_[v];
    const int kb = b.mate_[v] == 0 ? b.n() + 1 : b.mate_[v];
    if (auto c = ka <=> kb; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::uint64_t double_factorial_odd(int n) {
  std::uint64_t out = 1;
  for (int k = n - 1; k > 1; k -= 2) out *= static_cast<std::uint64_t>(k);
  return out;
}

std::uint64_t count_matchings(int n, int f) {
  if (n < 0 || f < 0 || f > n || (n - f) % 2 != 0) return 0;
  std::uint64_t binom = 1;
  for (int i = 1; i <= f; ++i) {
    binom = binom * static_cast<std::uint64_t>(n - f + i) /
            static_cast<std::uint64_t>(i);
  }
  return binom * double_factorial_odd(n - f);
}

namespace {

// Handles the smallest vertex not yet placed: first pair it with each
// larger free vertex in increasing order, then leave it unmatched if the
// budget of free vertices allows.
void enumerate_rec(std::vector<std::uint8_t>& mate, std::vector<bool>& placed,
                   int n, int v, int singles_left,
                   const std::function<void(const Matching&)>& visit) {
  while (v <= n && placed[v]) ++v;
  if (v > n) {
    if (singles_left == 0) visit(Matching::from_mates(mate));
    return;
  }
  placed[v] = true;
  for (int w = v + 1; w <= n; ++w) {
    if (placed[w]) continue;
    placed[w] = true;
    mate[v] = static_cast<std::uint8_t>(w);
    mate[w] = static_cast<std::uint8_t>(v);
    enumerate_rec(mate, placed, n, v + 1, singles_left, visit);
    mate[v] = 0;
    mate[w] = 0;
    placed[w] = false;
  }
  if (singles_left > 0) {
    enumerate_rec(mate, placed, n, v + 1, singles_left - 1, visit);
  }
  placed[v] = false;
}

}  // namespace

void for_each_matching(int n, int f,
                       const std::function<void(const Matching&)>& visit) {
  if (count_matchings(n, f) == 0) return;
  check_size(n);
  std::vector<std::uint8_t> mate(n + 1, 0);
  std::vector<bool> placed(n + 1, false);
  enumerate_rec(mate, placed, n, 1, f, visit);
}

std::vector<Matching> enumerate_matchings(int n, int f) {
  std::vector<Matching> out;
  out.reserve(count_matchings(n, f));
  for_each_matching(n, f, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::vector<Matching> enumerate_all_matchings(int n) {
  std::vector<Matching> out;
  for (int f = n % 2; f <= n; f += 2) {
    for_each_matching(n, f, [&](const Matching& m) { out.push_back(m); });
  }
  return out;
}

StatSet short_set(const Matching& m) {
  std::uint64_t mask = 0;
  for (int i = 1; i < m.n(); ++i) {
    if (m.mate(i) == i + 1) mask |= std::uint64_t{1} << (i - 1);
  }
  return StatSet(m.n(), mask);
}

bool chords_intersect(Chord a, Chord b) {
  if (a.open > a.close) std::swap(a.open, a.close);
  if (b.open > b.close) std::swap(b.open, b.close);
  if (a.open == b.open || a.open == b.close || a.close == b.open ||
      a.close == b.close) {
    throw MatchingError("chords " + chord_text(a.open, a.close) + " and " +
                        chord_text(b.open, b.close) + " share an endpoint");
  }
  if (b.open < a.open) std::swap(a, b);
  return a.open < b.open && b.open < a.close && a.close < b.close;
}

namespace {

std::vector<int> sorted_vertices(int n, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw MatchingError("vertex set has repeated elements");
  }
  if (!s.empty() && (s.front() < 1 || s.back() > n)) {
    throw MatchingError("vertex set leaves [" + std::to_string(n) + "]");
  }
  return s;
}

}  // namespace

std::string invariance_violation(const Matching& m,
                                 const std::vector<int>& subset) {
  const std::vector<int> s = sorted_vertices(m.n(), subset);
  std::vector<bool> in(m.n() + 1, false);
  for (int v : s) in[v] = true;
  for (const auto& c : m.chords()) {
    if (in[c.open] != in[c.close]) {
      return "chord " + chord_text(c.open, c.close) +
             " crosses the boundary of the vertex set";
    }
  }
  return {};
}

Matching restrict(const Matching& m, const std::vector<int>& subset) {
  if (auto why = invariance_violation(m, subset); !why.empty()) {
    throw MatchingError("set is not invariant: " + why);
  }
  const std::vector<int> s = sorted_vertices(m.n(), subset);
  std::vector<int> index(m.n() + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) index[s[k]] = static_cast<int>(k) + 1;
  std::vector<std::uint8_t> mate(s.size() + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const int w = m.mate(s[k]);
    mate[k + 1] = static_cast<std::uint8_t>(w == 0 ? 0 : index[w]);
  }
  return Matching::from_mates(std::move(mate));
}

std::vector<int> complement_of(int n, const std::vector<int>& subset) {
  const std::vector<int> s = sorted_vertices(n, subset);
  std::vector<int> out;
  std::size_t k = 0;
  for (int v = 1; v <= n; ++v) {
    if (k < s.size() && s[k] == v) {
      ++k;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

Matching combine(int n, const std::vector<int>& subset, const Matching& inner,
                 const Matching& outer) {
  check_size(n);
  const std::vector<int> s = sorted_vertices(n, subset);
  const std::vector<int> rest = complement_of(n, s);
  if (static_cast<int>(s.size()) != inner.n() ||
      static_cast<int>(rest.size()) != outer.n()) {
    throw MatchingError("combine: sizes " + std::to_string(inner.n()) + "+" +
                        std::to_string(outer.n()) + " do not fit split " +
                        std::to_string(s.size()) + "+" +
                        std::to_string(rest.size()));
  }
  std::vector<std::uint8_t> mate(n + 1, 0);
  auto place = [&](const std::vector<int>& labels, const Matching& part) {
    for (int v = 1; v <= part.n(); ++v) {
      const int w = part.mate(v);
      mate[labels[v - 1]] =
          static_cast<std::uint8_t>(w == 0 ? 0 : labels[w - 1]);
    }
  };
  place(s, inner);
  place(rest, outer);
  return Matching::from_mates(std::move(mate));
}

}  // namespace matchsym

std::size_t std::hash<matchsym::Matching>::operator()(
    const matchsym::Matching& m) const noexcept {
  // FNV-1a over the mate table.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : m.mates()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}
