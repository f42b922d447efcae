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

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace matchsym {

/// Thread budget handed to the data-parallel helpers. One thread means
/// everything runs inline on the caller.
class Workers {
 public:
  Workers() = default;
  explicit Workers(int threads) : threads_(std::max(1, threads)) {}

  static Workers serial() { return Workers(1); }
  /// One worker per hardware thread.
  static Workers automatic() {
    return Workers(static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  }

  int threads() const { return threads_; }

 private:
  int threads_ = 1;
};

/// Map-reduce over the index range [0, count).
///
/// The range is cut into contiguous chunks, one per worker; each chunk folds
/// into its own accumulator and the accumulators are merged left to right,
/// so the result does not depend on the thread count as long as `merge` is
/// associative.
template <typename Acc, typename Init, typename Body, typename Merge>
Acc parallel_reduce(std::size_t count, const Workers& workers, Init init,
                    Body body, Merge merge) {
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(workers.threads()),
                            std::max<std::size_t>(count, 1));
  if (chunks <= 1) {
    Acc acc = init();
    for (std::size_t i = 0; i < count; ++i) body(acc, i);
    return acc;
  }
  std::vector<Acc> partial;
  partial.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) partial.push_back(init());
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      const std::size_t lo = count * c / chunks;
      const std::size_t hi = count * (c + 1) / chunks;
      try {
        for (std::size_t i = lo; i < hi; ++i) body(partial[c], i);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc acc = std::move(partial.front());
  for (std::size_t c = 1; c < chunks; ++c) merge(acc, std::move(partial[c]));
  return acc;
}

/// Runs `body(i)` for every i in [0, count) on the worker budget.
template <typename Body>
void parallel_for(std::size_t count, const Workers& workers, Body body) {
  struct Unit {};
  parallel_reduce<Unit>(
      count, workers, [] { return Unit{}; },
      [&](Unit&, std::size_t i) { body(i); }, [](Unit&, Unit&&) {});
}

}  // namespace matchsym
