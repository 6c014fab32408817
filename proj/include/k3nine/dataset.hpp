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

#include <optional>
#include <string>
#include <vector>

#include "k3nine/classifier.hpp"

namespace k3nine::dataset {

struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One row of the bundled tau table, with the derived lattice expectations.
struct TauRecord {
    classifier::TauCase tau;
    Int lattice_det;   // expected determinant of the invariant lattice
    Int disc_order;    // expected discriminant-group order
    std::string anchor;
};

/// One expected classification row.
struct RowRecord {
    classifier::ReferenceRow row;
    std::string a_status;  // "printed" or "derived"
    std::string anchor;
};

struct FibrationFixture {
    std::string name;
    std::string a, b;  // polynomial text
    std::vector<std::pair<std::string, int>> census;  // symbol -> count, sorted
    int euler = 0;
    bool has_bisection = false;
    bool bisection_splits = false;
    int bisection_genus = 0;
    std::optional<int> base_order;  // when set, invariant fibers are checked
    std::vector<std::string> invariant_points;
    std::string anchor;
    std::string note;  // computed-vs-text note, empty when none
};

struct MonomialFixture {
    std::string name;
    unsigned order = 9;
    std::vector<int> weights;
    int character = 0;
    int degree = 4;
    std::vector<std::string> expected;        // monomial strings, file order
    std::vector<int> necessarily_singular;    // coordinate indices
    std::string anchor;
};

struct Dataset {
    int version = 0;
    std::vector<TauRecord> table2;
    std::vector<RowRecord> table1;
    std::vector<FibrationFixture> fibrations;
    std::vector<MonomialFixture> monomials;

    std::vector<classifier::TauCase> tau_cases() const;
    std::vector<classifier::ReferenceRow> reference_rows() const;
};

/// FNV-1a 64-bit digest, lowercase hex; the integrity checksum the data
/// files carry over the compact dump of their "records" payload.
std::string fnv1a64_hex(const std::string& data);

/// Loads and validates table2.json, table1.json and fixtures.json from dir.
/// Checks the version fields, the integrity digests and basic shape
/// invariants (n + m = 10, Euler consistency, parseable lattice and
/// polynomial text). Throws DatasetError with a precise message.
Dataset load_dataset(const std::string& dir);

}  // namespace k3nine::dataset
