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

#include "matchsym/report.hpp"

#include <cstdint>
#include <limits>

namespace matchsym {

Json to_json(const Matching& m) { return m.to_string(); }

Json to_json(const StatSet& s) { return s.members(); }

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const SchurExpansion& e) {
  Json out = Json::object();
  for (const auto& t : e.terms()) out[t.shape.to_string()] = t.coefficient;
  return out;
}

Json to_json(const DescentVector& v) {
  Json out = Json::array();
  for (const auto& [mask, count] : v.support()) {
    out.push_back({StatSet(v.n(), mask).members(), count});
  }
  return out;
}

Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coefficients()) {
    // Small values stay numeric; anything wider is kept exact as a string.
    if (c <= std::numeric_limits<std::int64_t>::max() &&
        c >= std::numeric_limits<std::int64_t>::min()) {
      coeffs.push_back(static_cast<std::int64_t>(c));
    } else {
      coeffs.push_back(c.str());
    }
  }
  return {{"text", p.to_string()}, {"coefficients", coeffs}};
}

Json to_json(const TwoRowTableau& t) {
  return {{"n", t.n()},
          {"shape", t.shape().parts()},
          {"first_row", t.first_row()},
          {"second_row", t.second_row()}};
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

}  // namespace matchsym
