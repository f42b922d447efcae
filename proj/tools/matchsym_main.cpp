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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "matchsym/cli.hpp"
#include "matchsym/tableaux.hpp"

namespace {

struct Usage {
  const char* name;
  const char* help;
  const char* positional;
};

constexpr Usage kCommands[] = {
    {"enumerate", "List M_{N,f} with short-chord sets", "N f"},
    {"short", "Short-chord set of a matching", "MATCHING"},
    {"core", "Core, stable vertices and removed chords", "MATCHING"},
    {"forward", "Image (core, two-row tableau) of a matching", "MATCHING"},
    {"inverse", "Matching from a core and a tableau second row",
     "CORE [SECOND_ROW]"},
    {"classes", "Move classes of M_{N,f}", "N f"},
    {"expand", "Schur expansion of a set under its statistic", "[N [f]]"},
    {"bessel", "theta_n and its re-expansion at -1", "n"},
    {"avoid", "Matchings of M_{N,f} avoiding the given patterns", "N f"},
    {"refine", "Refine M_{N,f} by a crossing statistic", "N f"},
    {"schreier", "Schreier graph on perfect matchings of 2n points", "2n"},
    {"conjecture", "Compare Asc and Des over perfect matchings", "2n"},
    {"verify", "Run every verification check", ""},
};

}  // namespace

int main(int argc, char** argv) {
  matchsym::RunConfig config;
  std::string format = "json";
  std::string cache_dir;

  CLI::App app{"Symmetric statistics on matchings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache-dir", cache_dir,
                 "Shape vector cache (default: $MATCHSYM_CACHE_DIR)");
  app.add_option("--threads", config.threads, "Worker threads, 0 for auto")
      ->capture_default_str();
  app.add_option("--format", format, "json, csv or text")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized checks")
      ->capture_default_str();
  app.add_option("--max-n", config.max_n, "Bound on N (at most 16)")
      ->capture_default_str();
  app.add_option("--max-2n", config.max_2n, "Bound on 2n (at most 14)")
      ->capture_default_str();
  app.add_flag("--timings", config.timings, "Include timings in reports");

  for (const Usage& u : kCommands) {
    CLI::App* sub = app.add_subcommand(u.name, u.help);
    if (*u.positional) {
      sub->add_option("args", config.args, u.positional);
    }
    const std::string name = u.name;
    if (name == "expand") {
      sub->add_option("--N", config.n, "Size N (2n for asc/des)");
      sub->add_option("--f", config.f, "Unmatched vertices");
      sub->add_option("--set", config.set,
                      "matchings, short-free, avoiders, asc or des")
          ->capture_default_str();
    }
    if (name == "inverse") {
      sub->add_option("--n", config.n, "Size, when it is not implied");
    }
    if (name == "expand" || name == "avoid") {
      sub->add_option("--pattern", config.patterns, "Pattern matching")
          ->take_all();
    }
    if (name == "refine") {
      sub->add_option("--key", config.key,
                      "iso-class, crossing, pair-count, intersecting-chords, "
                      "max-I")
          ->capture_default_str();
    }
    if (name == "schreier") {
      sub->add_option_function<std::string>(
             "--export",
             [&config](const std::string& what) {
               if (what != "dot") {
                 throw CLI::ValidationError("--export", "only 'dot'");
               }
               config.export_dot = true;
             },
             "Export format (dot)");
      sub->add_flag("--loops", config.dot_loops, "Keep loops in DOT output");
    }
    if (name == "verify") {
      sub->add_flag("--full-schreier", config.full_schreier,
                    "Extend the Schreier checks to 2n = 14");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  try {
    config.format = matchsym::parse_format(format);
    const matchsym::Report report = matchsym::run(config);
    std::cout << report.render(config.format);
    return report.exit_code;
  } catch (const matchsym::CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
