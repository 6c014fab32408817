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

#include "k3nine/cyclotomic.hpp"

namespace k3nine::lefschetz {

/// Local diagonalized action diag(zeta^i, zeta^j) at a fixed point, with
/// 1 <= i <= j <= n. j == n encodes the on-curve type (j = 0 mod n): the
/// point sits on a pointwise-fixed curve and is not isolated.
struct LocalType {
    int i = 0;
    int j = 0;
    auto operator<=>(const LocalType&) const = default;
};

bool is_on_curve_type(const LocalType& t, unsigned n);

std::string type_name(const LocalType& t, unsigned n);  // "a_{2,8}"

/// All (i,j) with 1 <= i <= j <= n and i + j = k (mod n), sorted.
/// curve_points_allowed=false drops on-curve pairs (j = 0 mod n);
/// cube_isolated_only=true additionally drops pairs where the cube of the
/// action has an eigenvalue-1 direction (3i or 3j = 0 mod n) -- the filter
/// for "the cube acts symplectically with isolated fixed points".
std::vector<LocalType> admissible_types(unsigned n, int k, bool curve_points_allowed,
                                        bool cube_isolated_only);

/// 1 / ((1 - zeta^i)(1 - zeta^j)); requires i, j nonzero mod n.
CycNum holo_term_point(unsigned n, int i, int j);

/// (1 + zeta) / (1 - zeta)^2, the fixed-curve contribution for character 1.
CycNum holo_term_curve(unsigned n);

/// The holomorphic fixed-point identity, expanded in power-basis coordinates
/// into phi(n) rational linear equations: sum over isolated types of
/// a_{i,j} * point term (+ alpha * curve term) = 1 + zeta^(-k).
/// On-curve types contribute no unknown. The curve term is only defined for
/// k = 1; requesting it for other characters throws.
struct LinearSystem {
    unsigned order = 0;
    int character = 0;
    bool has_alpha = false;
    std::vector<LocalType> point_types;       // isolated types, unknown order
    std::vector<std::string> unknowns;        // "a_{i,j}"..., then "alpha"
    std::vector<std::vector<Rat>> rows;       // phi(n) x unknowns
    std::vector<Rat> rhs;                     // phi(n)
};

LinearSystem build_holo_system(unsigned n, int k, const std::vector<LocalType>& types,
                               bool with_curve_term);

struct SolveBounds {
    long a_max = 24;      // Euler number of a K3 caps any fixed-point count
    long alpha_min = 0;   // negative alpha only when explicitly permitted
    long alpha_max = 4;
};

/// Exhaustive certified search: every integer assignment within bounds that
/// satisfies all equations exactly, in lexicographic order. Unknown order is
/// the system's (a-counts then alpha).
std::vector<std::vector<long>> solve_nonneg_integer(const LinearSystem& sys,
                                                    const SolveBounds& bounds = {});

/// One affine relation: sum coeffs[i] * unknown[i] = constant. Rows are
/// integer-scaled with content 1 and positive pivot.
struct Relation {
    std::vector<Int> coeffs;
    Int constant;
    bool operator==(const Relation&) const = default;
};

struct RelationSet {
    bool consistent = false;
    std::vector<std::string> unknowns;
    std::vector<Relation> relations;  // reduced row-echelon, canonical
};

/// Reduced row-echelon description of the rational affine solution set.
RelationSet solution_relations(const LinearSystem& sys);

/// Exact affine-span equality: both sets describe the same solution space.
/// This is how a relation list is compared against an equivalent published
/// presentation that is not in echelon form.
bool relations_equivalent(const RelationSet& a, const RelationSet& b);

bool relation_holds(const Relation& rel, const std::vector<long>& assignment);

/// Re-checks a solution at the cyclotomic level, independently of the
/// coordinatewise extraction: substitutes the counts back into the exact
/// identity over Q(zeta_n) and compares both sides.
bool holo_identity_holds(const LinearSystem& sys, const std::vector<long>& assignment);

/// Eigenvalue multiplicities of the induced isometry on the rank-22 lattice:
/// r for eigenvalue 1, l for each primitive cube root, s for each primitive
/// ninth root; r + 2l + 6s = 22.
struct EigenRanks {
    int r = 0;
    int l = 0;
    int s = 0;
    int m = 0;
    bool operator==(const EigenRanks&) const = default;
};

/// Solves r - l = n_sigma + 2*alpha - 2 and r + 2l = 22 - 2m for m in
/// {3,6,9}; empty when the solution is non-integral, l < 0 or r < 1.
std::optional<EigenRanks> try_eigen_ranks(int n_sigma, int alpha, int m);

/// Throwing form; std::domain_error("geometrically impossible...") on failure.
EigenRanks eigen_ranks_from_counts(int n_sigma, int alpha, int m);

/// Euler characteristic of the fixed locus of the cube: 24 - 3m.
int chi_fix_order3(int m);

}  // namespace k3nine::lefschetz
