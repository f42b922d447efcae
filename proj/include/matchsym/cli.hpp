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

// Command dispatch shared by the matchsym executable and the Python module.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchsym/report.hpp"

namespace matchsym {

enum class OutputFormat { kJson, kCsv, kText };

/// Throws std::invalid_argument for anything but json, csv, text.
OutputFormat parse_format(const std::string& name);

struct RunConfig {
  static constexpr int kHardMaxN = 16;
  static constexpr int kHardMax2n = 14;

  std::string command;
  /// Positional arguments of the command.
  std::vector<std::string> args;

  // Command options.
  std::optional<int> n;
  std::optional<int> f;
  std::string set = "matchings";
  std::vector<std::string> patterns;
  std::string key = "crossing";
  bool export_dot = false;
  bool dot_loops = false;
  bool full_schreier = false;

  // Global options.
  std::optional<std::string> cache_dir;
  /// 0 picks the hardware concurrency.
  int threads = 1;
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = 1;
  int max_n = kHardMaxN;
  int max_2n = kHardMax2n;
  /// Off by default so repeated runs produce identical bytes.
  bool timings = false;
};

struct Report {
  int exit_code = 0;
  Json json = Json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text_lines;
  /// When set, printed verbatim in every format (DOT export).
  std::optional<std::string> raw;

  std::string render(OutputFormat format) const;
};

/// The commands accepted by run_single.
const std::vector<std::string>& single_commands();

/// Validates bounds and applies the cache directory. Throws
/// std::invalid_argument or CacheError.
void prepare(const RunConfig& config);

/// One module operation. Parse errors and precondition violations
/// propagate as exceptions.
Report run_single(const RunConfig& config);

/// All verification checks within the configured bounds; exit code 0 iff
/// every check passes.
Report run_verify_all(const RunConfig& config);

/// prepare() followed by run_verify_all for "verify", run_single otherwise.
Report run(const RunConfig& config);

}  // namespace matchsym
