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

#include "matchsym/cli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "matchsym/bessel.hpp"
#include "matchsym/bijection.hpp"
#include "matchsym/knuth.hpp"
#include "matchsym/patterns.hpp"
#include "matchsym/schreier.hpp"
#include "matchsym/verify.hpp"

namespace matchsym {
namespace {

std::string join(const std::vector<int>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(what + " must be an integer, got '" + text +
                                "'");
  }
  return value;
}

const std::string& arg(const RunConfig& c, std::size_t i,
                       const std::string& what) {
  if (i >= c.args.size()) {
    throw std::invalid_argument(c.command + ": missing argument <" + what +
                                ">");
  }
  return c.args[i];
}

int int_arg(const RunConfig& c, std::size_t i, const std::string& what) {
  return parse_int(arg(c, i, what), what);
}

Workers workers_of(const RunConfig& c) {
  return c.threads <= 0 ? Workers::automatic() : Workers(c.threads);
}

void require_parity(int n, int f) {
  if (n < 0 || f < 0 || f > n || (n - f) % 2 != 0) {
    throw std::invalid_argument("no matchings with N=" + std::to_string(n) +
                                " and f=" + std::to_string(f) +
                                ": need 0 <= f <= N and N - f even");
  }
}

void guard_n(const RunConfig& c, int n, std::uint64_t size) {
  if (n > c.max_n) {
    throw std::invalid_argument(
        "N=" + std::to_string(n) + " exceeds --max-n " +
        std::to_string(c.max_n) + " (refused: " + std::to_string(size) +
        " matchings)");
  }
}

void guard_2n(const RunConfig& c, int two_n) {
  if (two_n > c.max_2n) {
    throw std::invalid_argument(
        "2n=" + std::to_string(two_n) + " exceeds --max-2n " +
        std::to_string(c.max_2n) + " (refused: " +
        std::to_string(double_factorial_odd(std::max(two_n, 0))) +
        " vertices)");
  }
}

Json provenance(const RunConfig& c, const std::string& operation) {
  return {{"operation", operation},
          {"bounds", {{"max_n", c.max_n}, {"max_2n", c.max_2n}}}};
}

Report start(const RunConfig& c, const std::string& operation) {
  Report r;
  r.json["command"] = c.command;
  r.json["provenance"] = provenance(c, operation);
  return r;
}

void expansion_rows(Report& r, const std::optional<SchurExpansion>& q) {
  r.csv_header = {"shape", "coefficient"};
  if (!q) {
    r.text_lines.push_back("not symmetric");
    return;
  }
  for (const auto& t : q->terms()) {
    r.csv_rows.push_back({t.shape.to_string(), std::to_string(t.coefficient)});
  }
  r.text_lines.push_back(q->to_string());
}

// ---------------------------------------------------------------------------

Report cmd_enumerate(const RunConfig& c) {
  const int n = int_arg(c, 0, "N"), f = int_arg(c, 1, "f");
  require_parity(n, f);
  guard_n(c, n, count_matchings(n, f));
  Report r = start(c, "matchings.enumerate_matchings(N,f)");
  Json items = Json::array();
  r.csv_header = {"index", "matching", "short"};
  std::size_t index = 0;
  for_each_matching(n, f, [&](const Matching& m) {
    const StatSet s = short_set(m);
    items.push_back({{"matching", m.to_string()}, {"short", to_json(s)}});
    r.csv_rows.push_back({std::to_string(index++), m.to_string(), s.to_string()});
    r.text_lines.push_back(m.to_string() + "  Short=" + s.to_string());
  });
  r.json["N"] = n;
  r.json["f"] = f;
  r.json["count"] = items.size();
  r.json["matchings"] = std::move(items);
  return r;
}

Report cmd_short(const RunConfig& c) {
  const Matching m = Matching::parse(arg(c, 0, "matching"));
  const StatSet s = short_set(m);
  Report r = start(c, "matchings.short_set");
  r.json["matching"] = m.to_string();
  r.json["short"] = to_json(s);
  r.csv_header = {"matching", "short"};
  r.csv_rows.push_back({m.to_string(), s.to_string()});
  r.text_lines.push_back(s.to_string());
  return r;
}

Report cmd_core(const RunConfig& c) {
  const Matching m = Matching::parse(arg(c, 0, "matching"));
  const ReductionResult red = reduce(m);
  Report r = start(c, "bijection.reduce");
  Json removed = Json::array();
  for (const Chord& ch : red.unstable_chords) removed.push_back({ch.open, ch.close});
  r.json["matching"] = m.to_string();
  r.json["core"] = red.core.to_string();
  r.json["stable"] = red.stable;
  r.json["unstable_chords"] = std::move(removed);
  r.csv_header = {"matching", "core", "stable"};
  r.csv_rows.push_back({m.to_string(), red.core.to_string(), join(red.stable)});
  r.text_lines.push_back("core   " + red.core.to_string());
  r.text_lines.push_back("stable {" + join(red.stable) + "}");
  return r;
}

Report cmd_forward(const RunConfig& c) {
  const Matching m = Matching::parse(arg(c, 0, "matching"));
  const BijectionImage img = forward(m);
  Report r = start(c, "bijection.forward");
  r.json["matching"] = m.to_string();
  r.json["core"] = img.core.to_string();
  r.json["tableau"] = to_json(img.tableau);
  r.json["descent_set"] = to_json(img.tableau.descent_set());
  r.json["short"] = to_json(short_set(m));
  r.csv_header = {"matching", "core", "shape", "second_row", "descent_set"};
  r.csv_rows.push_back({m.to_string(), img.core.to_string(),
                        img.tableau.shape().to_string(),
                        join(img.tableau.second_row()),
                        img.tableau.descent_set().to_string()});
  r.text_lines.push_back("core    " + img.core.to_string());
  r.text_lines.push_back("tableau " + img.tableau.to_syt().to_string());
  r.text_lines.push_back("Des     " + img.tableau.descent_set().to_string());
  return r;
}

Report cmd_inverse(const RunConfig& c) {
  const Matching core_m = Matching::parse(arg(c, 0, "core"));
  const std::string row = c.args.size() > 1 ? c.args[1] : "";
  // The size is forced: the core plus two vertices per second-row entry.
  std::size_t k = 0;
  {
    std::string probe = row;
    std::replace(probe.begin(), probe.end(), ',', ' ');
    std::istringstream in(probe);
    for (std::string tok; in >> tok;) {
      if (tok.find_first_not_of("{} ") != std::string::npos) ++k;
    }
  }
  const int n = c.n.value_or(core_m.n() + 2 * static_cast<int>(k));
  const TwoRowTableau t = TwoRowTableau::parse(n, row);
  const Matching m = inverse(core_m, t);
  Report r = start(c, "bijection.inverse");
  r.json["core"] = core_m.to_string();
  r.json["tableau"] = to_json(t);
  r.json["matching"] = m.to_string();
  r.csv_header = {"core", "second_row", "matching"};
  r.csv_rows.push_back({core_m.to_string(), join(t.second_row()), m.to_string()});
  r.text_lines.push_back(m.to_string());
  return r;
}

Report cmd_classes(const RunConfig& c) {
  const int n = int_arg(c, 0, "N"), f = int_arg(c, 1, "f");
  require_parity(n, f);
  guard_n(c, n, count_matchings(n, f));
  Report r = start(c, "knuth.equivalence_classes(N,f)");
  Json rows = Json::array();
  r.csv_header = {"core", "size", "shape"};
  for (const auto& cls : equivalence_classes(n, f)) {
    const Matching k_core = core(cls.front());
    const Partition shape = Partition::two_row(n, (n - k_core.n()) / 2);
    rows.push_back({{"core", k_core.to_string()},
                    {"size", cls.size()},
                    {"shape", to_json(shape)}});
    r.csv_rows.push_back({k_core.to_string(), std::to_string(cls.size()),
                          shape.to_string()});
    r.text_lines.push_back(k_core.to_string() + " " +
                           std::to_string(cls.size()) + " " +
                           shape.to_string());
  }
  r.json["N"] = n;
  r.json["f"] = f;
  r.json["classes"] = std::move(rows);
  return r;
}

Report cmd_expand(const RunConfig& c) {
  const int n = c.n ? *c.n : int_arg(c, 0, "N");
  const int f = c.f ? *c.f : (c.args.size() > 1 ? int_arg(c, 1, "f") : 0);
  const Workers w = workers_of(c);
  std::vector<Matching> items;
  DescentVector v;
  std::string operation;
  if (c.set == "asc" || c.set == "des") {
    if (n % 2 != 0 || n < 2) {
      throw std::invalid_argument("--set " + c.set + " needs an even N >= 2");
    }
    guard_2n(c, n);
    const SchreierGraph g = SchreierGraph::build(n, c.max_2n);
    const ConjectureReport rep = check_conjecture(g, w);
    v = c.set == "asc" ? rep.asc_vector : rep.des_vector;
    operation = "schreier.check_conjecture(2n)." + c.set;
  } else {
    require_parity(n, f);
    guard_n(c, n, count_matchings(n, f));
    if (c.set == "matchings") {
      items = enumerate_matchings(n, f);
      operation = "symfunc.schur_expand(M_{N,f}, Short)";
    } else if (c.set == "short-free") {
      for_each_matching(n, f, [&](const Matching& m) {
        if (short_set(m).empty()) items.push_back(m);
      });
      operation = "symfunc.schur_expand(M_{N,f}(Short=0), Short)";
    } else if (c.set == "avoiders") {
      std::vector<Matching> pats;
      for (const auto& p : c.patterns) pats.push_back(Matching::parse(p));
      items = avoiders(n, f, pats, w);
      operation = "patterns.avoiders(N,f,patterns) under Short";
    } else {
      throw std::invalid_argument(
          "unknown --set '" + c.set +
          "' (matchings, short-free, avoiders, asc, des)");
    }
    v = descent_vector(items, short_set, n, w);
  }
  const auto q = schur_expand(v);
  Report r = start(c, operation);
  r.json["set"] = c.set;
  r.json["N"] = n;
  if (c.set != "asc" && c.set != "des") r.json["f"] = f;
  r.json["count"] = v.total();
  r.json["symmetric"] = q.has_value();
  r.json["schur_positive"] = q && q->is_schur_positive();
  r.json["expansion"] = q ? to_json(*q) : Json();
  expansion_rows(r, q);
  return r;
}

Report cmd_bessel(const RunConfig& c) {
  const int n = int_arg(c, 0, "n");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const IntPolynomial theta = bessel_theta(n);
  const IntPolynomial h = shift_expand(theta, -1);
  Report r = start(c, "bessel.shift_expand(bessel_theta(n), -1)");
  r.json["n"] = n;
  r.json["theta"] = to_json(theta);
  r.json["h"] = to_json(h)["coefficients"];
  if (2 * n <= std::min(c.max_n, c.max_2n)) {
    r.json["h_enumerated"] = short_chord_distribution(n, workers_of(c));
  }
  r.csv_header = {"i", "h"};
  for (int i = 0; i <= h.degree(); ++i) {
    r.csv_rows.push_back({std::to_string(i), h.coefficient(i).str()});
  }
  r.text_lines.push_back("theta_" + std::to_string(n) + "(x) = " +
                         theta.to_string());
  r.text_lines.push_back("theta_" + std::to_string(n) + "(x-1) = " +
                         h.to_string());
  return r;
}

Report cmd_avoid(const RunConfig& c) {
  const int n = int_arg(c, 0, "N"), f = int_arg(c, 1, "f");
  require_parity(n, f);
  guard_n(c, n, count_matchings(n, f));
  std::vector<Matching> pats;
  for (const auto& p : c.patterns) pats.push_back(Matching::parse(p));
  const Workers w = workers_of(c);
  const auto set = avoiders(n, f, pats, w);
  const auto q = schur_expand(descent_vector(set, short_set, n, w));
  Report r = start(c, "patterns.avoiders(N,f,patterns)");
  Json pj = Json::array();
  for (const Matching& p : pats) {
    pj.push_back({{"pattern", p.to_string()},
                  {"singleton_predicate", singleton_pattern_schur_positive(p)}});
  }
  Json list = Json::array();
  r.csv_header = {"index", "matching"};
  for (std::size_t i = 0; i < set.size(); ++i) {
    list.push_back(set[i].to_string());
    r.csv_rows.push_back({std::to_string(i), set[i].to_string()});
    r.text_lines.push_back(set[i].to_string());
  }
  r.json["N"] = n;
  r.json["f"] = f;
  r.json["patterns"] = std::move(pj);
  r.json["count"] = set.size();
  r.json["symmetric"] = q.has_value();
  r.json["schur_positive"] = q && q->is_schur_positive();
  r.json["expansion"] = q ? to_json(*q) : Json();
  r.json["avoiders"] = std::move(list);
  return r;
}

Report cmd_refine(const RunConfig& c) {
  const int n = int_arg(c, 0, "N"), f = int_arg(c, 1, "f");
  require_parity(n, f);
  guard_n(c, n, count_matchings(n, f));
  const RefineKey key = parse_refine_key(c.key);
  Report r = start(c, "patterns.refine_by(N,f," + c.key + ")");
  Json rows = Json::array();
  r.csv_header = {"key", "count", "expansion", "schur_positive"};
  for (const RefineCell& cell : refine_by(n, f, key, workers_of(c))) {
    const std::string text =
        cell.expansion ? cell.expansion->to_string() : "not symmetric";
    rows.push_back({{"key", cell.key},
                    {"count", cell.count},
                    {"expansion", cell.expansion ? to_json(*cell.expansion)
                                                 : Json()},
                    {"schur_positive", cell.schur_positive()}});
    r.csv_rows.push_back({cell.key, std::to_string(cell.count), text,
                          cell.schur_positive() ? "true" : "false"});
    r.text_lines.push_back(c.key + "=" + cell.key + "  " +
                           std::to_string(cell.count) + "  " + text);
  }
  r.json["N"] = n;
  r.json["f"] = f;
  r.json["key"] = c.key;
  r.json["cells"] = std::move(rows);
  return r;
}

Report cmd_schreier(const RunConfig& c) {
  const int two_n = int_arg(c, 0, "2n");
  guard_2n(c, two_n);
  const SchreierGraph g = SchreierGraph::build(two_n, c.max_2n);
  Report r = start(c, "schreier.build(2n)");
  if (c.export_dot) {
    r.raw = to_dot(g, c.dot_loops);
    return r;
  }
  r.json["2n"] = two_n;
  r.json["vertices"] = g.size();
  r.json["layer_sizes"] = g.layer_sizes();
  r.json["bipartite_ignoring_loops"] = g.is_bipartite_ignoring_loops();
  Json rows = Json::array();
  r.csv_header = {"matching", "layer", "asc", "des", "loop"};
  for (std::size_t v = 0; v < g.size(); ++v) {
    const AscDesLoop s = asc_des_loop(g, v);
    const std::string m = g.vertex(v).to_string();
    rows.push_back({{"matching", m},
                    {"layer", g.layer(v)},
                    {"asc", to_json(s.asc)},
                    {"des", to_json(s.des)},
                    {"loop", to_json(s.loop)}});
    r.csv_rows.push_back({m, std::to_string(g.layer(v)), s.asc.to_string(),
                          s.des.to_string(), s.loop.to_string()});
    r.text_lines.push_back(m + "  layer " + std::to_string(g.layer(v)) +
                           "  Asc=" + s.asc.to_string() + " Des=" +
                           s.des.to_string() + " Loop=" + s.loop.to_string());
  }
  r.json["matchings"] = std::move(rows);
  return r;
}

Report cmd_conjecture(const RunConfig& c) {
  const int two_n = int_arg(c, 0, "2n");
  guard_2n(c, two_n);
  const SchreierGraph g = SchreierGraph::build(two_n, c.max_2n);
  const ConjectureReport rep = check_conjecture(g, workers_of(c));
  Report r = start(c, "schreier.check_conjecture(2n)");
  r.json["2n"] = two_n;
  r.json["equidistributed"] = rep.equidistributed;
  r.json["asc_expansion"] =
      rep.asc_expansion ? to_json(*rep.asc_expansion) : Json();
  r.json["des_expansion"] =
      rep.des_expansion ? to_json(*rep.des_expansion) : Json();
  r.json["asc_schur_positive"] =
      rep.asc_expansion && rep.asc_expansion->is_schur_positive();
  r.json["des_schur_positive"] =
      rep.des_expansion && rep.des_expansion->is_schur_positive();
  r.csv_header = {"statistic", "shape", "coefficient"};
  for (const auto& [name, q] :
       {std::pair{"asc", &rep.asc_expansion}, {"des", &rep.des_expansion}}) {
    if (!*q) continue;
    for (const auto& t : (*q)->terms()) {
      r.csv_rows.push_back(
          {name, t.shape.to_string(), std::to_string(t.coefficient)});
    }
  }
  r.text_lines.push_back(std::string("equidistributed: ") +
                         (rep.equidistributed ? "yes" : "no"));
  r.text_lines.push_back("Asc: " + (rep.asc_expansion
                                        ? rep.asc_expansion->to_string()
                                        : std::string("not symmetric")));
  r.text_lines.push_back("Des: " + (rep.des_expansion
                                        ? rep.des_expansion->to_string()
                                        : std::string("not symmetric")));
  return r;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw std::invalid_argument("unknown format '" + name +
                              "' (json, csv, text)");
}

std::string Report::render(OutputFormat format) const {
  if (raw) return *raw;
  switch (format) {
    case OutputFormat::kJson:
      return json.dump(2) + "\n";
    case OutputFormat::kCsv: {
      std::string out = csv_line(csv_header);
      for (const auto& row : csv_rows) out += csv_line(row);
      return out;
    }
    case OutputFormat::kText: {
      std::string out;
      for (const auto& line : text_lines) out += line + "\n";
      return out;
    }
  }
  return {};
}

const std::vector<std::string>& single_commands() {
  static const std::vector<std::string> names = {
      "enumerate", "short", "core",  "forward", "inverse",  "classes",
      "expand",    "bessel", "avoid", "refine", "schreier", "conjecture"};
  return names;
}

void prepare(const RunConfig& config) {
  if (config.max_n < 0 || config.max_n > RunConfig::kHardMaxN) {
    throw std::invalid_argument("--max-n must lie in [0, " +
                                std::to_string(RunConfig::kHardMaxN) + "]");
  }
  if (config.max_2n < 0 || config.max_2n > RunConfig::kHardMax2n) {
    throw std::invalid_argument("--max-2n must lie in [0, " +
                                std::to_string(RunConfig::kHardMax2n) + "]");
  }
  if (config.threads < 0) {
    throw std::invalid_argument("--threads must be positive, or 0 for auto");
  }
  if (config.cache_dir) shape_cache().set_directory(*config.cache_dir);
}

Report run_single(const RunConfig& c) {
  if (c.command == "enumerate") return cmd_enumerate(c);
  if (c.command == "short") return cmd_short(c);
  if (c.command == "core") return cmd_core(c);
  if (c.command == "forward") return cmd_forward(c);
  if (c.command == "inverse") return cmd_inverse(c);
  if (c.command == "classes") return cmd_classes(c);
  if (c.command == "expand") return cmd_expand(c);
  if (c.command == "bessel") return cmd_bessel(c);
  if (c.command == "avoid") return cmd_avoid(c);
  if (c.command == "refine") return cmd_refine(c);
  if (c.command == "schreier") return cmd_schreier(c);
  if (c.command == "conjecture") return cmd_conjecture(c);
  throw std::invalid_argument("unknown command '" + c.command + "'");
}

Report run_verify_all(const RunConfig& c) {
  VerifyOptions opt;
  VerifyBounds defaults;
  if (c.full_schreier) defaults.schreier_2n = RunConfig::kHardMax2n;
  opt.bounds = defaults.capped(c.max_n, c.max_2n);
  opt.seed = c.seed;
  opt.workers = workers_of(c);
  Report r = start(c, "verify.run_checks");
  r.json["seed"] = c.seed;
  Json checks = Json::array();
  r.csv_header = {"id", "passed", "detail", "provenance"};
  if (c.timings) r.csv_header.push_back("seconds");
  bool all_passed = true;
  for (const CheckResult& res : run_checks(opt)) {
    all_passed = all_passed && res.passed;
    Json row = {{"id", res.id},
                {"title", res.title},
                {"passed", res.passed},
                {"detail", res.detail},
                {"provenance", res.provenance},
                {"data", res.data}};
    if (c.timings) row["seconds"] = res.seconds;
    checks.push_back(std::move(row));
    std::vector<std::string> line = {res.id, res.passed ? "true" : "false",
                                     res.detail, res.provenance};
    if (c.timings) line.push_back(std::to_string(res.seconds));
    r.csv_rows.push_back(std::move(line));
    r.text_lines.push_back((res.passed ? "PASS " : "FAIL ") + res.id + ": " +
                           res.detail);
  }
  r.json["all_passed"] = all_passed;
  r.json["checks"] = std::move(checks);
  r.exit_code = all_passed ? 0 : 1;
  return r;
}

Report run(const RunConfig& config) {
  prepare(config);
  if (config.command == "verify") return run_verify_all(config);
  return run_single(config);
}

}  // namespace matchsym
