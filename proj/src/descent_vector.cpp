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

#include "matchsym/descent_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchsym {

DescentVector::DescentVector(int n) : n_(n) {
  if (n < 0 || n > kMaxDescentVectorN) {
    throw std::out_of_range("descent vectors are limited to 0 <= N <= " +
                            std::to_string(kMaxDescentVectorN) + ", got " +
                            std::to_string(n));
  }
  counts_.assign(subset_count(n), 0);
}

void DescentVector::add(const StatSet& s, std::int64_t times) {
  if (s.n() != n_) {
    throw std::invalid_argument("statistic of size " + std::to_string(s.n()) +
                                " added to descent vector of size " +
                                std::to_string(n_));
  }
  counts_[s.mask()] += times;
}

void DescentVector::add_scaled(const DescentVector& other,
                               std::int64_t factor) {
  if (other.n_ != n_) {
    throw std::invalid_argument("descent vectors of different sizes");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    counts_[i] += factor * other.counts_[i];
  }
}

std::int64_t DescentVector::total() const {
  std::int64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

bool DescentVector::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](std::int64_t c) { return c == 0; });
}

bool DescentVector::is_nonnegative() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](std::int64_t c) { return c >= 0; });
}

std::vector<std::pair<std::uint64_t, std::int64_t>> DescentVector::support()
    const {
  std::vector<std::pair<std::uint64_t, std::int64_t>> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) out.emplace_back(i, counts_[i]);
  }
  return out;
}

std::string DescentVector::to_string() const {
  std::string out;
  for (const auto& [mask, c] : support()) {
    if (!out.empty()) out += ' ';
    out += StatSet(n_, mask).to_string() + ":" + std::to_string(c);
  }
  return out.empty() ? "0" : out;
}

}  // namespace matchsym
