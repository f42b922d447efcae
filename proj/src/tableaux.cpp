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

#include "matchsym/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace matchsym {

// ---------------------------------------------------------------------------
// Partitions and compositions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument(
          "partition parts must be positive and weakly decreasing");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  int value = -1;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (std::isdigit(static_cast<unsigned char>(c))) {
      value = (value < 0 ? 0 : value * 10) + (c - '0');
      if (value > 1000) throw std::invalid_argument("partition part too large");
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      if (value >= 0) parts.push_back(value);
      value = -1;
    } else {
      throw std::invalid_argument("unexpected character '" +
                                  std::string(1, c) + "' in partition");
    }
  }
  return Partition(std::move(parts));
}

Partition Partition::two_row(int n, int k) {
  if (k < 0 || 2 * k > n) {
    throw std::invalid_argument("two-row shape needs 0 <= 2k <= n");
  }
  std::vector<int> parts;
  if (n - k > 0) parts.push_back(n - k);
  if (k > 0) parts.push_back(k);
  return Partition(std::move(parts));
}

Partition Partition::hook(int n, int k) {
  if (n == 0 && k == 0) return Partition();
  if (k < 0 || k >= n) throw std::invalid_argument("hook needs 0 <= k < n");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), k, 1);
  return Partition(std::move(parts));
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int c = 1; c <= part(0); ++c) {
    int len = 0;
    while (len < length() && parts_[len] >= c) ++len;
    cols.push_back(len);
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
}

int Composition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

bool Composition::equivalent(const Composition& other) const {
  auto a = parts_;
  auto b = other.parts_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Composition composition_of_set(const StatSet& s) {
  std::vector<int> parts;
  int prev = 0;
  for (int i : s.members()) {
    parts.push_back(i - prev);
    prev = i;
  }
  if (s.n() > 0) parts.push_back(s.n() - prev);
  return Composition(std::move(parts));
}

StatSet set_of_composition(const Composition& alpha) {
  std::vector<int> members;
  int sum = 0;
  const auto& parts = alpha.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    sum += parts[i];
    members.push_back(sum);
  }
  return StatSet::from_members(alpha.weight(), members);
}

std::strong_ordering conjugate_cmp(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw std::invalid_argument("conjugate order compares partitions of " +
                                std::to_string(a.weight()) + " and " +
                                std::to_string(b.weight()));
  }
  return a.conjugate().parts() <=> b.conjugate().parts();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  // Lexicographic order of conjugates, largest first. The conjugate map
  // is a bijection, so this is a total order.
  std::vector<std::pair<std::vector<int>, Partition>> keyed;
  keyed.reserve(out.size());
  for (auto& p : out) keyed.emplace_back(p.conjugate().parts(), std::move(p));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  out.clear();
  for (auto& [key, p] : keyed) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Tableaux

Syt::Syt(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::vector<int> lengths;
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  for (const auto& r : rows_) {
    if (r.empty()) throw std::invalid_argument("SYT has an empty inner row");
  }
  shape_ = Partition(lengths);
  const int n = shape_.weight();
  row_index_.assign(n + 1, -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int e = rows_[i][j];
      if (e < 1 || e > n || row_index_[e] != -1) {
        throw std::invalid_argument("SYT entries must be exactly 1.." +
                                    std::to_string(n));
      }
      row_index_[e] = static_cast<int>(i);
      if (j > 0 && rows_[i][j - 1] >= e) {
        throw std::invalid_argument("SYT rows must increase");
      }
      if (i > 0 && rows_[i - 1][j] >= e) {
        throw std::invalid_argument("SYT columns must increase");
      }
    }
  }
}

int Syt::row_of(int entry) const { return row_index_.at(entry); }

std::string Syt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += '/';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(rows_[i][j]);
    }
  }
  return out;
}

StatSet descent_set(const Syt& t) {
  std::uint64_t mask = 0;
  for (int i = 1; i < t.size(); ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) mask |= std::uint64_t{1} << (i - 1);
  }
  return StatSet(t.size(), mask);
}

std::uint64_t hook_length_count(const Partition& shape) {
  const Partition conj = shape.conjugate();
  const int n = shape.weight();
  // n! / prod(hooks), accumulated as a reduced fraction step by step.
  __extension__ using Wide = unsigned __int128;
  Wide value = 1;
  for (int k = 2; k <= n; ++k) value *= static_cast<unsigned>(k);
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) {
      const int hook = (shape.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
      value /= static_cast<unsigned>(hook);
    }
  }
  return static_cast<std::uint64_t>(value);
}

namespace {

// Places entries 1..N in order; entry e may go to row r when the row is not
// full and the row above is strictly longer.
void syt_rec(const std::vector<int>& shape, std::vector<std::vector<int>>& rows,
             int entry, int n, const std::function<void(const Syt&)>& visit) {
  if (entry > n) {
    visit(Syt(rows));
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const int len = static_cast<int>(rows[r].size());
    if (len >= shape[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
    rows[r].push_back(entry);
    syt_rec(shape, rows, entry + 1, n, visit);
    rows[r].pop_back();
  }
}

void descent_rec(const std::vector<int>& shape, std::vector<int>& filled,
                 int entry, int n, int prev_row, std::uint64_t mask,
                 DescentVector& out) {
  if (entry > n) {
    out.add(mask);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const int len = filled[r];
    if (len >= shape[r]) continue;
    if (r > 0 && filled[r - 1] <= len) continue;
    std::uint64_t next = mask;
    if (entry > 1 && static_cast<int>(r) > prev_row) {
      next |= std::uint64_t{1} << (entry - 2);
    }
    ++filled[r];
    descent_rec(shape, filled, entry + 1, n, static_cast<int>(r), next, out);
    --filled[r];
  }
}

}  // namespace

void for_each_syt(const Partition& shape,
                  const std::function<void(const Syt&)>& visit) {
  std::vector<std::vector<int>> rows(shape.length());
  syt_rec(shape.parts(), rows, 1, shape.weight(), visit);
}

std::vector<Syt> enumerate_syt(const Partition& shape) {
  std::vector<Syt> out;
  for_each_syt(shape, [&](const Syt& t) { out.push_back(t); });
  return out;
}

Syt superstandard(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::vector<std::vector<int>> rows(shape.length());
  int offset = 0;
  for (int j = 0; j < conj.length(); ++j) {
    for (int i = 0; i < conj.part(j); ++i) rows[i].push_back(offset + i + 1);
    offset += conj.part(j);
  }
  return Syt(std::move(rows));
}

StatSet superstandard_descent_set(const Partition& shape) {
  const int n = shape.weight();
  std::uint64_t mask = full_mask(n);
  int sum = 0;
  const Partition columns = shape.conjugate();
  for (int c : columns.parts()) {
    sum += c;
    if (sum < n) mask &= ~(std::uint64_t{1} << (sum - 1));
  }
  return StatSet(n, mask);
}

DescentVector compute_descent_vector_of_shape(const Partition& shape) {
  DescentVector out(shape.weight());
  std::vector<int> filled(shape.length(), 0);
  descent_rec(shape.parts(), filled, 1, shape.weight(), 0, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Cache

void ShapeVectorCache::set_directory(const std::filesystem::path& dir) {
  std::lock_guard lock(mutex_);
  if (dir.empty()) {
    dir_.reset();
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw CacheError("cannot create cache directory " + dir.string() +
                     (ec ? ": " + ec.message() : ""));
  }
  const auto probe = dir / (".probe." + std::to_string(::getpid()));
  {
    std::ofstream out(probe);
    if (!out || !(out << "ok\n")) {
      throw CacheError("cache directory " + dir.string() + " is not writable");
    }
  }
  std::filesystem::remove(probe, ec);
  dir_ = dir;
}

std::filesystem::path ShapeVectorCache::file_for(
    const Partition& shape) const {
  std::string name = "syt_" + std::to_string(shape.weight());
  for (std::size_t i = 0; i < shape.parts().size(); ++i) {
    name += (i == 0 ? "_" : "-") + std::to_string(shape.parts()[i]);
  }
  return dir_.value_or(".") / (name + ".txt");
}

std::optional<DescentVector> ShapeVectorCache::load(
    const Partition& shape) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(file_for(shape));
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::string parts;
  for (std::size_t i = 0; i < shape.parts().size(); ++i) {
    parts += (i ? "," : "") + std::to_string(shape.parts()[i]);
  }
  if (header != "# shape N=" + std::to_string(shape.weight()) +
                    " parts=" + parts) {
    return std::nullopt;
  }
  DescentVector v(shape.weight());
  std::uint64_t mask = 0;
  std::int64_t count = 0;
  while (in >> mask >> count) {
    if (mask >= subset_count(shape.weight()) || count <= 0) return std::nullopt;
    v.add(mask, count);
  }
  if (!in.eof()) return std::nullopt;
  if (static_cast<std::uint64_t>(v.total()) != hook_length_count(shape)) {
    return std::nullopt;
  }
  return v;
}

void ShapeVectorCache::store(const Partition& shape,
                             const DescentVector& v) const {
  if (!dir_) return;
  const auto target = file_for(shape);
  std::random_device rd;
  const auto tmp = target.string() + ".tmp." + std::to_string(::getpid()) +
                   "." + std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << "# shape N=" << shape.weight() << " parts=";
    for (std::size_t i = 0; i < shape.parts().size(); ++i) {
      out << (i ? "," : "") << shape.parts()[i];
    }
    out << '\n';
    for (const auto& [mask, count] : v.support()) {
      out << mask << ' ' << count << '\n';
    }
    if (!out) throw CacheError("failed writing cache file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CacheError("failed to publish cache file " + target.string());
  }
}

const DescentVector& ShapeVectorCache::get(const Partition& shape) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(shape); it != memory_.end()) return *it->second;
  }
  std::optional<DescentVector> v = load(shape);
  if (!v) {
    v = compute_descent_vector_of_shape(shape);
    store(shape, *v);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = memory_.emplace(
      shape, std::make_shared<const DescentVector>(std::move(*v)));
  return *it->second;
}

void ShapeVectorCache::precompute(int n, const Workers& workers) {
  const auto shapes = partitions_of(n);
  parallel_for(shapes.size(), workers, [&](std::size_t i) { get(shapes[i]); });
}

void ShapeVectorCache::clear_memory() {
  std::lock_guard lock(mutex_);
  memory_.clear();
}

ShapeVectorCache& shape_cache() {
  static ShapeVectorCache* cache = [] {
    auto* c = new ShapeVectorCache();
    if (const char* env = std::getenv("MATCHSYM_CACHE_DIR"); env && *env) {
      c->set_directory(env);
    }
    return c;
  }();
  return *cache;
}

const DescentVector& descent_vector_of_shape(const Partition& shape) {
  return shape_cache().get(shape);
}

}  // namespace matchsym
