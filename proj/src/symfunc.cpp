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

#include "matchsym/symfunc.hpp"

#include <algorithm>
#include <map>

namespace matchsym {

std::int64_t SchurExpansion::coefficient(const Partition& shape) const {
  for (const auto& t : terms_) {
    if (t.shape == shape) return t.coefficient;
  }
  return 0;
}

void SchurExpansion::add(const Partition& shape, std::int64_t c) {
  if (shape.weight() != n_) {
    throw std::invalid_argument("shape " + shape.to_string() +
                                " does not partition " + std::to_string(n_));
  }
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), shape,
      [](const Term& t, const Partition& p) { return t.shape > p; });
  if (it != terms_.end() && it->shape == shape) {
    it->coefficient += c;
    if (it->coefficient == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{shape, c});
  }
}

bool SchurExpansion::is_schur_positive() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient >= 0; });
}

bool SchurExpansion::only_two_row() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.shape.is_two_row(); });
}

bool SchurExpansion::only_hooks() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.shape.is_hook(); });
}

std::int64_t SchurExpansion::dimension() const {
  std::int64_t sum = 0;
  for (const auto& t : terms_) {
    sum += t.coefficient * static_cast<std::int64_t>(hook_length_count(t.shape));
  }
  return sum;
}

DescentVector SchurExpansion::descent_vector() const {
  DescentVector out(n_);
  for (const auto& t : terms_) {
    out.add_scaled(descent_vector_of_shape(t.shape), t.coefficient);
  }
  return out;
}

std::string SchurExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::int64_t c = t.coefficient;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = c < 0 ? -c : c;
    if (c != 1) out += std::to_string(c) + " ";
    out += "s" + t.shape.to_string();
  }
  return out;
}

DescentVector complement_vector(const DescentVector& v) {
  DescentVector out(v.n());
  const std::uint64_t full = full_mask(v.n());
  for (const auto& [mask, c] : v.support()) out.add(full & ~mask, c);
  return out;
}

std::vector<std::int64_t> subset_sums(const DescentVector& v) {
  std::vector<std::int64_t> f(v.counts().begin(), v.counts().end());
  const int bits = v.n() <= 1 ? 0 : v.n() - 1;
  for (int b = 0; b < bits; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (s & bit) f[s] += f[s ^ bit];
    }
  }
  return f;
}

std::vector<std::int64_t> superset_sums(const DescentVector& v) {
  std::vector<std::int64_t> f(v.counts().begin(), v.counts().end());
  const int bits = v.n() <= 1 ? 0 : v.n() - 1;
  for (int b = 0; b < bits; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (!(s & bit)) f[s] += f[s | bit];
    }
  }
  return f;
}

bool is_symmetric_by_compositions(const DescentVector& v) {
  const auto respect = subset_sums(v);
  std::map<std::vector<int>, std::int64_t> by_type;
  for (std::size_t s = 0; s < respect.size(); ++s) {
    auto parts = composition_of_set(StatSet(v.n(), s)).parts();
    std::sort(parts.begin(), parts.end());
    auto [it, inserted] = by_type.emplace(std::move(parts), respect[s]);
    if (!inserted && it->second != respect[s]) return false;
  }
  return true;
}

std::optional<SchurExpansion> schur_expand(const DescentVector& v) {
  // Shapes are visited largest first in the conjugate order. The column
  // superstandard descent set of lambda occurs in no shape smaller than
  // lambda and exactly once in lambda itself, so its residual count is the
  // coefficient of lambda once all larger shapes have been subtracted.
  DescentVector residual = v;
  SchurExpansion out(v.n());
  for (const Partition& shape : partitions_of(v.n())) {
    const std::int64_t c = residual.count(superstandard_descent_set(shape));
    if (c == 0) continue;
    residual.add_scaled(descent_vector_of_shape(shape), -c);
    out.add(shape, c);
  }
  if (!residual.is_zero()) return std::nullopt;
  return out;
}

CriterionResult sparse_criterion(const DescentVector& v) {
  const int n = v.n();
  CriterionResult out;
  for (int k = 0; 2 * k <= n; ++k) {
    out.coefficients.push_back(v.count(StatSet::odds(n, k)));
  }
  for (const auto& [mask, c] : v.support()) {
    if (!StatSet(n, mask).is_sparse()) return out;
  }
  const auto above = superset_sums(v);
  std::vector<std::optional<std::int64_t>> per_size(n + 1);
  for (std::size_t s = 0; s < above.size(); ++s) {
    const StatSet j(n, s);
    if (!j.is_sparse()) continue;
    auto& slot = per_size[j.size()];
    if (!slot) {
      slot = above[s];
    } else if (*slot != above[s]) {
      return out;
    }
  }
  out.holds = true;
  return out;
}

CriterionResult hook_criterion(const DescentVector& v) {
  const int n = v.n();
  CriterionResult out;
  const int top = std::max(n - 1, 0);
  for (int k = 0; k <= top; ++k) {
    out.coefficients.push_back(v.count(StatSet::prefix(n, k)));
  }
  for (std::size_t s = 0; s < v.counts().size(); ++s) {
    const StatSet j(n, s);
    if (v.count(s) != out.coefficients[j.size()]) return out;
  }
  out.holds = true;
  return out;
}

SchurExpansion two_row_expansion(int n, std::span<const std::int64_t> c) {
  SchurExpansion out(n);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out.add(Partition::two_row(n, static_cast<int>(k)), c[k]);
  }
  return out;
}

SchurExpansion hook_expansion(int n, std::span<const std::int64_t> c) {
  SchurExpansion out(n);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out.add(Partition::hook(n, static_cast<int>(k)), c[k]);
  }
  return out;
}

}  // namespace matchsym
