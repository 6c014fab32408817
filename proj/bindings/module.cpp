/*
   Copyright 2026 The k3nine authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "k3nine/report.hpp"

namespace py = pybind11;
using namespace k3nine;

namespace {

std::string rat_str(const Rat& r) { return to_string(r); }

std::vector<std::string> coords_str(const CycNum& c) {
    std::vector<std::string> out;
    for (const auto& x : c.coords()) out.push_back(to_string(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations behind the classification of order-9 "
              "non-symplectic K3 automorphisms";
    m.attr("__version__") = "1.0.0";

    py::class_<QPoly>(m, "QPoly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }))
        .def_property_readonly("is_zero", &QPoly::is_zero)
        .def_property_readonly("degree",
                               [](const QPoly& p) -> py::object {
                                   if (p.is_zero()) return py::none();
                                   return py::int_(p.degree());
                               })
        .def_property_readonly("var", &QPoly::var)
        .def("coeffs",
             [](const QPoly& p) {
                 std::vector<std::string> out;
                 for (const auto& c : p.coeffs()) out.push_back(rat_str(c));
                 return out;
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("monic", &QPoly::monic)
        .def("derivative", &QPoly::derivative)
        .def("pow", &QPoly::pow)
        .def("__str__", &QPoly::str)
        .def("__repr__", [](const QPoly& p) { return "QPoly(\"" + p.str() + "\")"; });

    m.def("parse_poly", &parse_poly);
    m.def("poly_gcd", &poly_gcd);
    m.def("resultant", [](const QPoly& p, const QPoly& q) { return rat_str(resultant(p, q)); });
    m.def("squarefree_decomposition", [](const QPoly& p) {
        std::vector<std::pair<QPoly, int>> out = squarefree_decomposition(p);
        return out;
    });
    m.def("coprime_refinement", &coprime_refinement);

    py::class_<CycNum>(m, "CycNum")
        .def(py::init([](unsigned n, const std::string& r) {
                 return CycNum(n, Rat(r));
             }),
             py::arg("order"), py::arg("rational") = "0")
        .def_property_readonly("order", &CycNum::order)
        .def("coords", &coords_str)
        .def_property_readonly("is_zero", &CycNum::is_zero)
        .def_property_readonly("is_rational", &CycNum::is_rational)
        .def("rational_value", [](const CycNum& c) { return rat_str(c.rational_value()); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("inverse", &CycNum::inverse)
        .def("galois_conjugate", &CycNum::galois_conjugate)
        .def("norm", [](const CycNum& c) { return rat_str(c.norm()); })
        .def("__str__", &CycNum::str)
        .def("__repr__", [](const CycNum& c) { return "CycNum(" + c.str() + ")"; });

    m.def("zeta_pow", &CycNum::zeta_pow, py::arg("order"), py::arg("k") = 1);
    m.def("cyclotomic_polynomial", &cyclotomic_polynomial);
    m.def("euler_phi", &euler_phi);

    m.def("eigen_ranks", [](int n_sigma, int alpha, int mm) {
        auto e = lefschetz::eigen_ranks_from_counts(n_sigma, alpha, mm);
        return py::make_tuple(e.r, e.l, e.s);
    });
    m.def("chi_fix_order3", &lefschetz::chi_fix_order3);
    m.def("rh_options", [](int genus, bool hyperelliptic) {
        auto s = classifier::rh_options(genus, hyperelliptic);
        return std::vector<int>(s.begin(), s.end());
    });

    // JSON-report surface; the python package turns these into dicts.
    m.def("lefschetz_report",
          [](unsigned order, int k, bool isolated_only, bool enumerate, long a_max,
             long alpha_min, long alpha_max) {
              lefschetz::SolveBounds b{a_max, alpha_min, alpha_max};
              return report::lefschetz_report(order, k, isolated_only, enumerate, b).dump();
          });
    m.def("lattice_report",
          [](const std::string& expr) { return report::lattice_report(expr).dump(); });
    m.def("fibration_report", [](const std::string& a, const std::string& b) {
        return report::fibration_report(a, b).dump();
    });
    m.def("bisection_report",
          [](const std::string& f) { return report::bisection_report(f).dump(); });
    m.def("monomials_report",
          [](unsigned order, const std::vector<int>& weights, int character, int degree) {
              return report::monomials_report(order, weights, character, degree).dump();
          });
    m.def("classify_report",
          [](const std::string& data_dir, const std::string& axioms, const std::string& case_id) {
              auto ds = dataset::load_dataset(data_dir);
              auto pack = classifier::AxiomPack::from_selector(axioms);
              auto cls = classifier::classify_all(ds.tau_cases(), pack, ds.reference_rows());
              auto out = report::classification_report(cls, case_id);
              auto diff = report::diff_against_table(cls.rows, ds.reference_rows(), case_id);
              out["match"] = diff.match;
              out["diff"] = diff.detail;
              return out.dump();
          });
    m.def("explain_report", [](const std::string& data_dir, const std::string& axioms,
                               const std::string& row_id) {
        auto ds = dataset::load_dataset(data_dir);
        auto pack = classifier::AxiomPack::from_selector(axioms);
        auto cls = classifier::classify_all(ds.tau_cases(), pack, ds.reference_rows());
        return classifier::explain_row(cls, row_id);
    });
    m.def("verify_report", [](const std::string& data_dir) {
        auto ds = dataset::load_dataset(data_dir);
        return report::checks_to_json(report::verify_paper(ds)).dump();
    });
}
