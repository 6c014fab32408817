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
#include <utility>
#include <vector>

#include "k3nine/rat.hpp"

namespace k3nine {

/// Dense univariate polynomial over Q. Immutable-by-convention value type;
/// coefficient k multiplies var^k, trailing zeros are never stored, so the
/// zero polynomial has an empty coefficient vector (the "minus infinity"
/// degree marker is the absence of a degree, never -1 arithmetic).
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(const Rat& c, std::string var = "t");
    explicit QPoly(long c, std::string var = "t");
    QPoly(std::vector<Rat> coeffs, std::string var = "t");

    static QPoly variable(const std::string& var = "t");
    /// c * var^e
    static QPoly monomial(const Rat& c, int e, const std::string& var = "t");

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree of a nonzero polynomial; throws std::logic_error on zero.
    int degree() const;
    std::optional<int> degree_opt() const;

    const std::string& var() const { return var_; }
    const Rat& leading() const;
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rat& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(QPoly a, const Rat& c) { return a *= c; }
    friend QPoly operator*(const Rat& c, QPoly a) { return a *= c; }

    QPoly derivative() const;
    QPoly monic() const;  // zero stays zero
    QPoly pow(unsigned e) const;
    Rat eval(const Rat& x) const;

    /// Euclidean division a = q*b + r with deg r < deg b; throws on b == 0.
    static std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
    /// Exact quotient; throws std::domain_error if the remainder is nonzero.
    static QPoly div_exact(const QPoly& a, const QPoly& b);

    bool operator==(const QPoly& o) const;
    bool operator!=(const QPoly& o) const { return !(*this == o); }
    /// Total order for deterministic sorting (degree, then coefficients).
    static int compare(const QPoly& a, const QPoly& b);

    std::string str() const;

  private:
    std::vector<Rat> coeffs_;
    std::string var_ = "t";

    void trim();
    static std::string unify_var(const QPoly& a, const QPoly& b);
};

/// Monic gcd; gcd(0,0) = 0, gcd(p,0) = monic(p).
QPoly poly_gcd(const QPoly& p, const QPoly& q);

/// True iff d divides p with zero remainder (d != 0).
bool divides_exactly(const QPoly& d, const QPoly& p);

/// Largest e with d^e | p, for nonconstant d and nonzero p.
int multiplicity(const QPoly& d, const QPoly& p);

/// Yun's decomposition: p = lc(p) * prod s_i^{m_i} with the s_i monic,
/// squarefree, pairwise coprime and the m_i strictly increasing.
/// Constant factors are dropped; a constant p yields the empty list.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

/// Product of the squarefree layers, i.e. p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);

/// Gcd-free basis: pairwise-coprime squarefree monic polynomials such that
/// every input is, up to a constant, a product of powers of basis elements.
/// Deterministically sorted; constants never appear in the output.
std::vector<QPoly> coprime_refinement(const std::vector<QPoly>& ps);

/// Resultant via the subresultant pseudo-remainder sequence, matching the
/// Sylvester-determinant sign convention. res(p, q) = 0 iff p and q share a
/// root (a zero input counts as sharing every root).
Rat resultant(const QPoly& p, const QPoly& q);

/// Shared text grammar: integer or rational literals (-3, 5/7), one variable
/// symbol, + - * ^ and parentheses; whitespace insignificant.
QPoly parse_poly(const std::string& text);

}  // namespace k3nine
