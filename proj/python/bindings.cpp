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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matchsym/bessel.hpp"
#include "matchsym/bijection.hpp"
#include "matchsym/cli.hpp"
#include "matchsym/knuth.hpp"
#include "matchsym/patterns.hpp"
#include "matchsym/schreier.hpp"
#include "matchsym/symfunc.hpp"

namespace py = pybind11;
using namespace matchsym;

namespace {

py::dict expansion_dict(const SchurExpansion& e) {
  py::dict out;
  for (const auto& t : e.terms()) {
    out[py::tuple(py::cast(t.shape.parts()))] = t.coefficient;
  }
  return out;
}

py::object maybe_expansion(const std::optional<SchurExpansion>& e) {
  if (!e) return py::none();
  return expansion_dict(*e);
}

std::vector<Matching> parse_all(const std::vector<std::string>& texts) {
  std::vector<Matching> out;
  for (const auto& t : texts) out.push_back(Matching::parse(t));
  return out;
}

py::object big(const BigInt& x) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(x.str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_matchsym, m) {
  m.doc() = "Matchings, short chords and Schur expansions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MatchingError>(m, "MatchingError", PyExc_ValueError);
  py::register_exception<CacheError>(m, "CacheError", PyExc_OSError);

  py::class_<Matching>(m, "Matching")
      .def(py::init(&Matching::parse), py::arg("text"))
      .def_static("parse", &Matching::parse)
      .def_property_readonly("n", &Matching::n)
      .def_property_readonly("chords", [](const Matching& x) {
        std::vector<std::pair<int, int>> out;
        for (const Chord& c : x.chords()) out.emplace_back(c.open, c.close);
        return out;
      })
      .def_property_readonly("singletons", &Matching::singletons)
      .def("short_set",
           [](const Matching& x) { return short_set(x).members(); })
      .def("__str__", &Matching::to_string)
      .def("__repr__",
           [](const Matching& x) { return "Matching('" + x.to_string() + "')"; })
      .def("__eq__", [](const Matching& a, const Matching& b) { return a == b; })
      .def("__lt__", [](const Matching& a, const Matching& b) { return a < b; })
      .def("__hash__",
           [](const Matching& x) { return std::hash<Matching>{}(x); });

  m.def("enumerate_matchings", &enumerate_matchings, py::arg("n"),
        py::arg("f"));
  m.def("core", [](const Matching& x) { return core(x); });
  m.def("stable_vertices", [](const Matching& x) { return reduce(x).stable; });
  m.def("forward", [](const Matching& x) {
    const auto img = forward(x);
    return py::make_tuple(img.core, img.tableau.second_row());
  });
  m.def(
      "inverse",
      [](const Matching& c, int n, const std::vector<int>& second_row) {
        return inverse(c, TwoRowTableau::from_second_row(n, second_row));
      },
      py::arg("core"), py::arg("n"), py::arg("second_row"));

  m.def(
      "schur_expand_matchings",
      [](int n, int f) {
        return maybe_expansion(schur_expand(
            descent_vector(enumerate_matchings(n, f), short_set, n)));
      },
      py::arg("n"), py::arg("f"));
  m.def(
      "sparse_coefficients",
      [](int n, int f) {
        const auto r = sparse_criterion(enumerate_matchings(n, f), short_set, n);
        return py::make_tuple(r.holds, r.coefficients);
      },
      py::arg("n"), py::arg("f"));

  m.def("bessel_theta", [](int n) {
    py::list out;
    const IntPolynomial theta = bessel_theta(n);
    for (const BigInt& c : theta.coefficients()) out.append(big(c));
    return out;
  });
  m.def(
      "short_chord_distribution",
      [](int n) { return short_chord_distribution(n); }, py::arg("n"));
  m.def("schur_coeffs_via_bessel", &schur_coeffs_via_bessel, py::arg("n"),
        py::arg("f"));

  m.def(
      "equivalence_classes",
      [](int n, int f) { return equivalence_classes(n, f); }, py::arg("n"),
      py::arg("f"));
  m.def("elementary_moves", &elementary_moves);

  m.def(
      "avoiders",
      [](int n, int f, const std::vector<std::string>& patterns) {
        return avoiders(n, f, parse_all(patterns));
      },
      py::arg("n"), py::arg("f"), py::arg("patterns"));
  m.def("contains_pattern", &contains_pattern, py::arg("m"),
        py::arg("pattern"));
  m.def("crossing_number", &crossing_number);
  m.def(
      "refine",
      [](int n, int f, const std::string& key) {
        py::list out;
        for (const auto& cell : refine_by(n, f, parse_refine_key(key))) {
          out.append(py::make_tuple(cell.key, cell.count,
                                    maybe_expansion(cell.expansion)));
        }
        return out;
      },
      py::arg("n"), py::arg("f"), py::arg("key") = "crossing");

  m.def(
      "schreier_layers",
      [](int two_n) { return SchreierGraph::build(two_n).layer_sizes(); },
      py::arg("two_n"));
  m.def(
      "asc_des_equidistributed",
      [](int two_n) {
        const auto r = check_conjecture(SchreierGraph::build(two_n));
        return py::make_tuple(r.equidistributed,
                              maybe_expansion(r.asc_expansion),
                              maybe_expansion(r.des_expansion));
      },
      py::arg("two_n"));

  m.def(
      "run",
      [](const std::string& command, const std::vector<std::string>& args,
         int max_n, int max_2n, int threads) {
        RunConfig c;
        c.command = command;
        c.args = args;
        c.max_n = max_n;
        c.max_2n = max_2n;
        c.threads = threads;
        const Report r = run(c);
        return py::make_tuple(r.exit_code, r.json.dump());
      },
      py::arg("command"), py::arg("args") = std::vector<std::string>{},
      py::arg("max_n") = RunConfig::kHardMaxN,
      py::arg("max_2n") = RunConfig::kHardMax2n, py::arg("threads") = 1);
  m.def("set_cache_dir", [](const std::string& dir) {
    shape_cache().set_directory(dir);
  });
}
