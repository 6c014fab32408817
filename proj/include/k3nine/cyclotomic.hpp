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

namespace k3nine {

unsigned euler_phi(unsigned n);

/// The n-th cyclotomic polynomial, monic with integer coefficients.
QPoly cyclotomic_polynomial(unsigned n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo the n-th cyclotomic polynomial. The representation is
/// canonical: two values are equal iff their coordinate vectors are equal.
/// No floating-point embedding exists anywhere; all identities stay exact.
class CycNum {
  public:
    /// Zero in Q(zeta_n).
    explicit CycNum(unsigned n);
    CycNum(unsigned n, const Rat& rational);

    static CycNum zeta(unsigned n);                  // zeta_n
    static CycNum zeta_pow(unsigned n, long k);      // zeta_n^k, k reduced mod n
    /// From arbitrary power-basis coordinates (any length); reduced mod Phi_n.
    static CycNum from_coords(unsigned n, std::vector<Rat> coords);

    unsigned order() const { return n_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws std::domain_error if not rational

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    friend CycNum operator*(const CycNum& a, const Rat& c);
    friend CycNum operator*(const Rat& c, const CycNum& a) { return a * c; }

    /// Multiplicative inverse via the extended Euclidean identity against
    /// the cyclotomic polynomial; throws std::domain_error on zero.
    CycNum inverse() const;

    /// Image under zeta -> zeta^k; requires gcd(k, n) = 1.
    CycNum galois_conjugate(long k) const;

    /// Product of all Galois conjugates; rational for every element.
    Rat norm() const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// Symbolic form, e.g. "1 - zeta^3 + 2/3*zeta^4".
    std::string str() const;

  private:
    unsigned n_;
    std::vector<Rat> coords_;  // size phi(n)

    static void check_same_order(const CycNum& a, const CycNum& b);
};

}  // namespace k3nine
