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

// Exhaustive checks of the structural results over bounded ranges. Each
// check returns a record with its verdict, a short detail line, and data
// for machine-readable reports.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "matchsym/parallel.hpp"
#include "matchsym/report.hpp"

namespace matchsym {

struct VerifyBounds {
  int schur_n = 12;          // two-row expansion of M_{N,f} under Short
  int criterion_n = 10;      // sparse criterion, both directions
  int bijection_n = 12;      // forward/inverse roundtrips
  int random_order_n = 9;    // removal-order independence
  int random_orders = 20;
  int classes_n = 9;         // move classes vs core fibers
  int bessel_n = 7;          // theta_n(x-1) vs enumeration, n = half size
  int bessel_coeff_n = 12;   // coefficients via Bessel vs enumeration
  int collapse_n = 6;        // short-chord collapse bijection, half size
  int pattern_n = 5;         // patterns checked
  int avoider_n = 9;         // ambient sizes for avoiders
  int refine_n = 9;
  int schreier_2n = 12;
  int hook_n = 8;

  /// Every N-type bound capped at max_n and the Schreier bound at max_2n.
  VerifyBounds capped(int max_n, int max_2n) const;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  /// Operation and bounds that produced the numbers in `data`.
  std::string provenance;
  Json data = Json::object();
  double seconds = 0;
};

struct VerifyOptions {
  VerifyBounds bounds;
  std::uint64_t seed = 1;
  Workers workers = Workers::serial();
};

CheckResult check_two_row_expansion(const VerifyOptions& opt);
CheckResult check_sparse_criterion(const VerifyOptions& opt);
CheckResult check_bijection(const VerifyOptions& opt);
CheckResult check_move_classes(const VerifyOptions& opt);
CheckResult check_bessel(const VerifyOptions& opt);
CheckResult check_singleton_patterns(const VerifyOptions& opt);
CheckResult check_refinements(const VerifyOptions& opt);
CheckResult check_schreier(const VerifyOptions& opt);
CheckResult check_hook_criterion(const VerifyOptions& opt);

struct NamedCheck {
  std::string id;
  std::function<CheckResult(const VerifyOptions&)> run;
};

/// The nine checks in order.
std::vector<NamedCheck> all_checks();

/// Runs every check, timing each. A check that throws is recorded as a
/// failure with the exception text as detail.
std::vector<CheckResult> run_checks(
    const VerifyOptions& opt,
    const std::function<void(const CheckResult&)>& on_result = {});

/// Brute-force |M_{N,f}(Short = empty)|.
std::int64_t count_short_free(int n, int f);

}  // namespace matchsym
