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

namespace k3nine::fibration {

/// y^2 = x^3 + a(t) x + b(t), with deg a <= 8 and deg b <= 12 (the K3 range)
/// and discriminant not identically zero.
struct WeierstrassModel {
    QPoly a;
    QPoly b;
};

/// Validates the degree bounds and a nonzero discriminant.
WeierstrassModel make_model(QPoly a, QPoly b);

/// Delta = -16 (4 a^3 + 27 b^2); throws std::domain_error when identically
/// zero ("not an elliptic surface").
QPoly discriminant(const WeierstrassModel& m);

/// Order of vanishing; the zero polynomial has infinite valuation, which
/// counts as ">= anything" in the fiber-type table.
struct Valuation {
    bool infinite = false;
    int v = 0;

    static Valuation inf() { return {true, 0}; }
    static Valuation of(int value) { return {false, value}; }
    bool at_least(int k) const { return infinite || v >= k; }
    bool equals(int k) const { return !infinite && v == k; }
    Valuation minus(int k) const { return infinite ? *this : of(v - k); }
    std::string str() const { return infinite ? "inf" : std::to_string(v); }
    bool operator==(const Valuation&) const = default;
};

struct KodairaType {
    std::string symbol;  // "I0", "I5", "II", "III", "IV", "I0*", "I3*", ...
    int euler = 0;
    bool operator==(const KodairaType&) const = default;
};

/// The residue-characteristic-zero fiber-type table on minimal valuation
/// triples. Combinations outside the table throw std::domain_error
/// ("unclassified ...").
KodairaType kodaira_type(Valuation va, Valuation vb, Valuation vd);

/// Galois class of finite places (defined by one monic squarefree
/// polynomial) or the place at infinity, with its shared valuations.
struct PlaceClass {
    std::string place;   // polynomial text or "inf"
    int count = 1;       // places in the class; degree of the polynomial
    Valuation va, vb, vd;  // after minimality reduction
    int reductions = 0;    // (4,6,12)-subtractions applied
    KodairaType type;
};

struct Analysis {
    std::vector<PlaceClass> places;  // finite singular classes sorted, then inf
    int euler_total = 0;
    bool k3 = false;  // euler_total == 24
};

/// Groups the finite places by the gcd-free refinement of {a, b, Delta}, so
/// every place in a class shares one valuation triple; adds the place at
/// infinity with v(a) = 8 - deg a, v(b) = 12 - deg b, v(Delta) = 24 - deg.
Analysis analyze(const WeierstrassModel& m);

/// Genus of the double cover y^2 = f(t), or a split into two sections when
/// the squarefree part of f is constant.
struct BisectionResult {
    bool splits = false;
    int genus = 0;
    bool operator==(const BisectionResult&) const = default;
};

BisectionResult bisection_genus(const QPoly& f);

/// Fixed base points of t -> zeta_d t. Requires the model to be compatible
/// with the diagonal action: the support of each coefficient polynomial lies
/// in a single residue class mod d.
struct InvariantFibers {
    bool whole_base = false;          // d = 1
    std::vector<std::string> points;  // otherwise {"0", "inf"}
};

InvariantFibers invariant_fibers(const WeierstrassModel& m, int base_order);

}  // namespace k3nine::fibration
