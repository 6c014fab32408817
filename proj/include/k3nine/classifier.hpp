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

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3nine/lefschetz.hpp"

namespace k3nine::classifier {

/// One row of the order-3 fixed-locus table: the input data per case.
/// curve_genera lists the genus of every pointwise-fixed curve of the cube,
/// sorted descending (at most one entry is positive).
struct TauCase {
    std::string id;                 // "A".."H"
    int n_points = 0;               // isolated fixed points of the cube
    std::vector<int> curve_genera;  // one entry per fixed curve
    int m = 0;                      // half the corank of the invariant lattice
    std::string lattice;            // invariant-lattice expression, e.g. "U(3)+A2"
    bool hyperelliptic = false;     // the positive-genus curve carries the
                                    // cited hyperelliptic restriction
};

/// What the order-9 automorphism does to one curve fixed by its cube.
enum class Fate { Fixed, Invariant, Cycled };

struct CurveFate {
    int genus = 0;
    Fate fate = Fate::Invariant;
    int fixed_points = 0;  // meaningful for Invariant only
    auto operator<=>(const CurveFate&) const = default;
};

/// Isolated-point counts in the fixed order of local types
/// (2,8), (3,7), (4,6), (5,5), plus the curve data they determine.
struct FixProfile {
    std::array<int, 4> a{};  // a_{2,8}, a_{3,7}, a_{4,6}, a_{5,5}
    int alpha = 0;
    int n_sigma = 0;
    int k_sigma = 0;
    std::optional<int> g_sigma;
    bool operator==(const FixProfile&) const = default;
};

struct SigmaRow {
    std::string id;       // table label when matched, "<case>-x<k>" otherwise
    std::string tau_id;   // "A".."H"
    std::vector<CurveFate> fates;  // canonical (sorted) multiset
    FixProfile profile;
    lefschetz::EigenRanks ranks;
    bool reference = false;  // matched a bundled table row
    bool operator==(const SigmaRow&) const = default;
};

/// Expected-row record from the bundled classification table, used to label
/// enumerated rows and to diff against them.
struct ReferenceRow {
    std::string id;
    std::string tau_id;
    int n_sigma = 0;
    int k_sigma = 0;
    std::optional<int> g_sigma;
    std::array<int, 4> a{};
    int alpha = 0;
    int r = 0;
    int l = 0;
};

bool row_matches_reference(const SigmaRow& row, const ReferenceRow& ref);

/// Named geometric fact imported with its source quote. The engine never
/// assumes these silently; each is togglable so that the purely
/// combinatorial superset remains computable.
struct Axiom {
    std::string key;
    std::string statement;
    std::string anchor;  // verbatim quote locating the fact in the source
};

class AxiomPack {
  public:
    static const std::vector<Axiom>& catalog();
    static AxiomPack full();
    static AxiomPack combinatorial();  // no geometric input at all
    /// From comma-separated keys or the words "full"/"combinatorial".
    static AxiomPack from_selector(const std::string& selector);

    bool has(const std::string& key) const { return enabled_.count(key) > 0; }
    AxiomPack with(const std::string& key) const;
    AxiomPack without(const std::string& key) const;
    std::vector<std::string> names() const;
    bool subset_of(const AxiomPack& other) const;

  private:
    std::set<std::string> enabled_;
};

inline constexpr const char* kAxGenus = "AX-GENUS";
inline constexpr const char* kAxFRational = "AX-F-RATIONAL";
inline constexpr const char* kAxDConfig = "AX-D-CONFIG";
inline constexpr const char* kAxHConfig = "AX-H-CONFIG";
inline constexpr const char* kAxHyper = "AX-HYPER";

/// Fixed-point counts available to an order-3 action on a genus-g curve:
/// { g + 2 - 3g' : g' >= 0, value >= 0 }, intersected with {2,3,4} for a
/// hyperelliptic curve of genus >= 2.
std::set<int> rh_options(int genus, bool hyperelliptic);

struct TraceEntry {
    bool accepted = false;
    std::string candidate;   // human-readable fate assignment
    std::string row_id;      // when accepted
    std::string constraint;  // first violated constraint, e.g. "C5" or "C6/AX-HYPER"
    std::string detail;
};

struct CaseTrace {
    std::string tau_id;
    std::vector<TraceEntry> entries;
};

/// All fixed-locus profiles of an order-9 automorphism compatible with this
/// tau-case under the given axiom pack. Labels come from `labels` (pass the
/// bundled table); unlabeled rows get synthetic ids and reference=false.
std::vector<SigmaRow> enumerate_case(const TauCase& tc, const AxiomPack& pack,
                                     const std::vector<ReferenceRow>& labels,
                                     CaseTrace* trace = nullptr);

struct Classification {
    std::vector<SigmaRow> rows;     // deterministic order
    std::vector<CaseTrace> traces;  // one per case, input order
};

Classification classify_all(const std::vector<TauCase>& table2, const AxiomPack& pack,
                            const std::vector<ReferenceRow>& labels);

/// Derivation trace for the case containing row_id: the accepted entry plus
/// every rejected candidate with the first violated constraint.
std::vector<std::string> explain_row(const Classification& cls, const std::string& row_id);

}  // namespace k3nine::classifier
