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

// JSON views of the library's value types. Key order is fixed so output is
// byte-stable.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "matchsym/bessel.hpp"
#include "matchsym/bijection.hpp"
#include "matchsym/descent_vector.hpp"
#include "matchsym/matching.hpp"
#include "matchsym/statset.hpp"
#include "matchsym/symfunc.hpp"
#include "matchsym/tableaux.hpp"

namespace matchsym {

using Json = nlohmann::ordered_json;

Json to_json(const Matching& m);
/// Members as an ascending array.
Json to_json(const StatSet& s);
Json to_json(const Partition& p);
/// {"(6)": 5, "(5,1)": 1, ...} in the expansion's term order.
Json to_json(const SchurExpansion& e);
/// Nonzero entries as [[members...], count] pairs by increasing mask.
Json to_json(const DescentVector& v);
Json to_json(const IntPolynomial& p);
Json to_json(const TwoRowTableau& t);

/// One CSV field, quoted when it contains a comma, quote, or newline.
std::string csv_field(const std::string& value);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace matchsym
