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

#include <string>
#include <vector>

#include "k3nine/qpoly.hpp"

namespace k3nine::projective {

/// Diagonal action x_i -> zeta^(w_i) x_i of order n on projective space,
/// together with the character c: an invariant form F must satisfy
/// F(action x) = zeta^c F(x).
struct DiagAction {
    unsigned order = 1;
    std::vector<int> weights;  // one residue mod n per homogeneous coordinate
    int character = 0;
};

/// Coordinate subspace pointwise fixed by the action, one per distinct
/// weight value; its projective dimension is (number of coordinates) - 1.
struct Stratum {
    int weight = 0;
    std::vector<int> coordinates;
    int dimension = 0;
    bool operator==(const Stratum&) const = default;
};

std::vector<Stratum> fixed_strata(const DiagAction& act);

/// Exponent vector; the entries sum to the degree.
using Monomial = std::vector<int>;

std::string monomial_str(const Monomial& m);  // "x0^3*x1", "x2*x3^3"

/// All degree-d monomials with sum e_i w_i = c (mod n), in descending
/// lexicographic exponent order (the order the defining equations use).
std::vector<Monomial> invariant_monomials(const DiagAction& act, int degree);

/// Necessary smoothness condition at the coordinate point e_i: some member
/// of the family must be nonzero or have nonzero gradient there, i.e. a
/// monomial with exponent >= d-1 in x_i must occur. This is a screen, not a
/// smoothness certificate.
struct ScreenVerdict {
    int coordinate = 0;
    bool necessarily_singular = false;
    std::string witness;  // a passing monomial, empty when singular
    bool operator==(const ScreenVerdict&) const = default;
};

std::vector<ScreenVerdict> coordinate_point_screen(const std::vector<Monomial>& monomials);

/// Root multiplicities of a degree-d binary form given by its
/// dehomogenization f (so d - deg f roots sit at infinity of the chart).
struct RootProfile {
    int form_degree = 0;
    std::vector<int> multiplicities;  // descending, affine roots then infinity
    bool distinct = false;
    bool root_at_infinity = false;
    int infinity_multiplicity = 0;
};

RootProfile line_intersection_count(const QPoly& dehomogenized, int form_degree);

}  // namespace k3nine::projective
