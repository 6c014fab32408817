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

#pragma once

#include <json.hpp>

#include "k3nine/dataset.hpp"
#include "k3nine/fibration.hpp"
#include "k3nine/lattice.hpp"
#include "k3nine/lefschetz.hpp"
#include "k3nine/projective.hpp"

namespace k3nine::report {

using nlohmann::json;

/// The three relations of the published constraint system for order 9,
/// character 1 (unknowns a_{2,8}, a_{3,7}, a_{4,6}, a_{5,5}, alpha).
lefschetz::RelationSet star_relations();

json relations_to_json(const lefschetz::RelationSet& rels);

/// Full holomorphic-fixed-point report: admissible types, the linear system's
/// relation set (or inconsistency), optionally the certified enumeration.
json lefschetz_report(unsigned order, int k, bool isolated_only, bool enumerate,
                      const lefschetz::SolveBounds& bounds, bool suppress_curve_term = false);

json lattice_report(const std::string& expr_text);

json fibration_report(const std::string& a_text, const std::string& b_text);

json bisection_report(const std::string& poly_text);

json monomials_report(unsigned order, const std::vector<int>& weights, int character,
                      int degree);

json row_to_json(const classifier::SigmaRow& row);

json classification_report(const classifier::Classification& cls,
                           const std::string& case_filter = "");

/// Row-for-row comparison of the classification against the bundled table.
struct TableDiff {
    bool match = false;
    json detail;  // {"missing": [...], "extra": [...]}
};

TableDiff diff_against_table(const std::vector<classifier::SigmaRow>& rows,
                             const std::vector<classifier::ReferenceRow>& expected,
                             const std::string& case_filter = "");

/// One verification check of the bundled regression gate.
struct Check {
    std::string name;
    std::string anchor;
    bool pass = false;
    std::string detail;
    std::string note;  // computed-vs-text note; informational, never a failure
};

/// The lattice-column verification alone: for every bundled case, rank =
/// 22 - 2m, hyperbolic signature, evenness, the frozen determinant, and the
/// discriminant group (SNF order cross-checked against |det|). One check per
/// case, failures name the row.
std::vector<Check> verify_table_lattices(const dataset::Dataset& ds);

/// Runs every bundled check: the inconsistency certificate, the relation
/// system, the classification table, the eight lattice rows, all fibration
/// fixtures and the monomial families.
std::vector<Check> verify_paper(const dataset::Dataset& ds);

json checks_to_json(const std::vector<Check>& checks);

}  // namespace k3nine::report
