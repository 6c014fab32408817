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

#include "k3nine/rat.hpp"

namespace k3nine::lattice {

/// Symmetric integer Gram matrix.
struct Gram {
    int n = 0;
    std::vector<Int> a;  // row-major, n*n

    Gram() = default;
    explicit Gram(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, Int(0)) {}
    Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    bool is_symmetric() const;
    bool operator==(const Gram&) const = default;
};

/// Direct sum over the atom alphabet U, U(lambda), A_n, E_6, E_8.
struct LatticeExpr {
    enum class Kind { U, A, E };
    struct Term {
        Kind kind;
        int param = 0;   // n for A_n; 6 or 8 for E; unused for U
        Int scale = 1;   // lambda for U(lambda); 1 otherwise
        int repeat = 1;
    };
    std::vector<Term> terms;

    std::string str() const;
};

/// Grammar: `U`, `U(3)`, `A2`, `E6`, `E8`, `+` for direct sum, `^k` for
/// repeated sum, e.g. `U(3)+A2^4`.
LatticeExpr parse_lattice_expr(const std::string& text);

/// Block-diagonal Gram matrix. U = [[0,1],[1,0]], U(lambda) scales the form;
/// the root lattices A_n, E_6, E_8 use the negative definite convention
/// (diagonal -2), as needed for sublattices of a K3 lattice.
Gram gram(const LatticeExpr& expr);

int rank(const Gram& g);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const Gram& g);

/// Signature (p, q) by exact rational congruence diagonalization; p + q may
/// be smaller than n for degenerate forms.
std::pair<int, int> signature(const Gram& g);

/// Invariant factors d_1 | d_2 | ... | d_n of a nonsingular Gram matrix,
/// all positive. The discriminant group is the sum of Z/d_i with d_i > 1.
/// Throws std::domain_error on singular input.
std::vector<Int> smith_normal_form(const Gram& g);

bool is_even(const Gram& g);

/// "Z/3 x Z/9" or "trivial", from invariant factors.
std::string discriminant_group_name(const std::vector<Int>& factors);

/// Order of the discriminant group (product of invariant factors).
Int discriminant_group_order(const std::vector<Int>& factors);

}  // namespace k3nine::lattice
