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

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "matchsym/cli.hpp"
#include "matchsym/verify.hpp"

using namespace matchsym;

namespace {

RunConfig config(const std::string& command, std::vector<std::string> args) {
  RunConfig c;
  c.command = command;
  c.args = std::move(args);
  return c;
}

}  // namespace

TEST_CASE("json conversions") {
  CHECK(to_json(Matching::parse("{(1,3),(2)}")) == "{(1,3),(2)}");
  CHECK(to_json(StatSet(5, {1, 3})) == Json::array({1, 3}));
  CHECK(to_json(Partition({3, 1})) == Json::array({3, 1}));
  SchurExpansion e(4);
  e.add(Partition({4}), 1);
  e.add(Partition({2, 2}), 1);
  CHECK(to_json(e).dump() == R"j({"(4)":1,"(2,2)":1})j");
  DescentVector v(3);
  v.add(StatSet(3, {1}), 2);
  CHECK(to_json(v).dump() == "[[[1],2]]");
  CHECK(to_json(bessel_theta(2)).dump() ==
        R"j({"text":"x^2 + 3x + 3","coefficients":[3,3,1]})j");
  CHECK(to_json(TwoRowTableau::parse(5, "2")).dump() ==
        R"j({"n":5,"shape":[4,1],"first_row":[1,3,4,5],"second_row":[2]})j");
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("{(1,2)}") == "\"{(1,2)}\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_line({"a", "b,c"}) == "a,\"b,c\"\n");
}

TEST_CASE("core command") {
  const Report r = run(config("core", {"{(1,2),(3,5),(4)}"}));
  CHECK(r.exit_code == 0);
  CHECK(r.json["core"] == "{(1,3),(2)}");
  CHECK(r.json["stable"] == Json::array({3, 4, 5}));
  CHECK(r.json["provenance"]["operation"].is_string());
  CHECK(r.render(OutputFormat::kCsv).rfind("matching,core,stable\n", 0) == 0);
}

TEST_CASE("bessel and expand commands") {
  const Report b = run(config("bessel", {"3"}));
  CHECK(b.json["theta"]["text"] == "x^3 + 6x^2 + 15x + 15");
  CHECK(b.json["h"] == Json::array({5, 6, 3, 1}));
  const Report e = run(config("expand", {"6", "0"}));
  CHECK(e.json["expansion"].dump() == R"j({"(6)":5,"(5,1)":1,"(3,3)":1})j");
  CHECK(e.json["schur_positive"] == true);
  CHECK(e.render(OutputFormat::kText) == "5 s(6) + s(5,1) + s(3,3)\n");
  RunConfig avoid = config("expand", {"3", "1"});
  avoid.set = "avoiders";
  avoid.patterns = {"{(1,2),(3)}"};
  const Report a = run(avoid);
  CHECK(a.json["symmetric"] == false);
}

TEST_CASE("inverse command") {
  const Report r = run(config("inverse", {"{(1,3),(2,4)}", "5,6,9"}));
  CHECK(r.json["matching"] == "{(1,7),(2,10),(3,6),(4,5),(8,9)}");
}

TEST_CASE("argument errors") {
  CHECK_THROWS(run(config("enumerate", {"5", "0"})));
  CHECK_THROWS(run(config("core", {"{(1,2"})));
  CHECK_THROWS(run(config("nonsense", {})));
  RunConfig big = config("enumerate", {"12", "0"});
  big.max_n = 10;
  CHECK_THROWS(run(big));
  RunConfig too_far = config("enumerate", {"2", "0"});
  too_far.max_n = 99;
  CHECK_THROWS(run(too_far));
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("output is deterministic across thread counts") {
  for (const std::string command : {"expand", "classes", "refine"}) {
    RunConfig one = config(command, {"8", "2"});
    RunConfig four = one;
    four.threads = 4;
    CHECK(run(one).render(OutputFormat::kJson) ==
          run(four).render(OutputFormat::kJson));
    CHECK(run(one).render(OutputFormat::kCsv) ==
          run(one).render(OutputFormat::kCsv));
  }
}

TEST_CASE("verify at small bounds") {
  RunConfig c = config("verify", {});
  c.max_n = 4;
  c.max_2n = 4;
  const Report r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.json["all_passed"] == true);
  CHECK(r.json["checks"].size() == 9);
  bool found = false;
  for (const auto& row : r.json["checks"][0]["data"]["cases"]) {
    if (row["N"] == 4 && row["f"] == 0) {
      CHECK(row["expansion"].dump() == R"j({"(4)":1,"(2,2)":1})j");
      found = true;
    }
  }
  CHECK(found);
  RunConfig again = c;
  again.threads = 3;
  CHECK(run(again).render(OutputFormat::kJson) ==
        r.render(OutputFormat::kJson));
}

TEST_CASE("unusable cache directory is an error") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("matchsym_report_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  RunConfig c = config("bessel", {"2"});
  c.cache_dir = (dir / "file" / "cache").string();
  CHECK_THROWS_AS(run(c), CacheError);
  std::filesystem::remove_all(dir);
}
