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

#include "matchsym/statset.hpp"

namespace matchsym {

std::uint64_t full_mask(int n) {
  if (n <= 1) return 0;
  if (n - 1 >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (n - 1)) - 1;
}

std::size_t subset_count(int n) {
  return n <= 1 ? 1 : std::size_t{1} << (n - 1);
}

StatSet::StatSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxAmbient) {
    throw std::out_of_range("StatSet: ambient size " + std::to_string(n) +
                            " outside [0, 64]");
  }
  if ((mask & ~full_mask(n)) != 0) {
    throw std::out_of_range("StatSet: members outside [N-1] for N=" +
                            std::to_string(n));
  }
}

StatSet::StatSet(int n, std::initializer_list<int> members)
    : StatSet(from_members(n, std::vector<int>(members))) {}

StatSet StatSet::from_members(int n, const std::vector<int>& members) {
  std::uint64_t mask = 0;
  for (int i : members) {
    if (i < 1 || i >= n) {
      throw std::out_of_range("StatSet: member " + std::to_string(i) +
                              " outside [1, " + std::to_string(n - 1) + "]");
    }
    mask |= std::uint64_t{1} << (i - 1);
  }
  return StatSet(n, mask);
}

StatSet StatSet::odds(int n, int k) {
  std::vector<int> members;
  for (int j = 0; j < k; ++j) members.push_back(2 * j + 1);
  return from_members(n, members);
}

StatSet StatSet::prefix(int n, int k) {
  std::vector<int> members;
  for (int j = 1; j <= k; ++j) members.push_back(j);
  return from_members(n, members);
}

StatSet StatSet::full(int n) { return StatSet(n, full_mask(n)); }

std::vector<int> StatSet::members() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

StatSet StatSet::complement() const {
  return StatSet(n_, full_mask(n_) & ~mask_);
}

std::string StatSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace matchsym
