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

#include "k3nine/lefschetz.hpp"

#include <algorithm>

namespace k3nine::lefschetz {

bool is_on_curve_type(const LocalType& t, unsigned n) {
    return t.j % static_cast<int>(n) == 0;
}

std::string type_name(const LocalType& t, unsigned n) {
    (void)n;
    return "a_{" + std::to_string(t.i) + "," + std::to_string(t.j) + "}";
}

std::vector<LocalType> admissible_types(unsigned n, int k, bool curve_points_allowed,
                                        bool cube_isolated_only) {
    if (k < 1 || k > static_cast<int>(n)) throw std::invalid_argument("character out of range");
    std::vector<LocalType> out;
    const int nn = static_cast<int>(n);
    for (int i = 1; i <= nn; ++i) {
        for (int j = i; j <= nn; ++j) {
            if ((i + j) % nn != k % nn) continue;
            if (!curve_points_allowed && (j % nn == 0 || i % nn == 0)) continue;
            if (cube_isolated_only && ((3 * i) % nn == 0 || (3 * j) % nn == 0)) continue;
            out.push_back({i, j});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycNum holo_term_point(unsigned n, int i, int j) {
    if (i % static_cast<int>(n) == 0 || j % static_cast<int>(n) == 0)
        throw std::invalid_argument("point term needs eigenvalues different from 1");
    CycNum one(n, Rat(1));
    CycNum den = (one - CycNum::zeta_pow(n, i)) * (one - CycNum::zeta_pow(n, j));
    return den.inverse();
}

CycNum holo_term_curve(unsigned n) {
    if (n < 2) throw std::invalid_argument("curve term needs order >= 2");
    CycNum one(n, Rat(1));
    CycNum z = CycNum::zeta(n);
    CycNum den = (one - z) * (one - z);
    return (one + z) * den.inverse();
}

LinearSystem build_holo_system(unsigned n, int k, const std::vector<LocalType>& types,
                               bool with_curve_term) {
    if (types.empty()) throw std::invalid_argument("no local types supplied");
    if (with_curve_term && k != 1)
        throw std::invalid_argument(
            "the fixed-curve term is only defined for character k = 1");

    LinearSystem sys;
    sys.order = n;
    sys.character = k;
    sys.has_alpha = with_curve_term;

    std::vector<CycNum> terms;
    for (const auto& t : types) {
        if (is_on_curve_type(t, n)) continue;  // not isolated, no unknown
        sys.point_types.push_back(t);
        sys.unknowns.push_back(type_name(t, n));
        terms.push_back(holo_term_point(n, t.i, t.j));
    }
    if (with_curve_term) {
        sys.unknowns.push_back("alpha");
        terms.push_back(holo_term_curve(n));
    }
    if (terms.empty()) throw std::invalid_argument("all supplied types lie on fixed curves");

    CycNum lhs = CycNum(n, Rat(1)) + CycNum::zeta_pow(n, -k);
    const size_t dim = euler_phi(n);
    sys.rows.assign(dim, std::vector<Rat>(terms.size(), Rat(0)));
    sys.rhs.assign(dim, Rat(0));
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < terms.size(); ++c) sys.rows[r][c] = terms[c].coords()[r];
        sys.rhs[r] = lhs.coords()[r];
    }
    return sys;
}

namespace {

// Reduced row echelon form of [A | b]; returns false on 0 = nonzero.
bool rref(std::vector<std::vector<Rat>>& m, size_t ncols_coeff) {
    size_t nrows = m.size();
    size_t lead = 0;
    for (size_t row = 0; row < nrows && lead < ncols_coeff; ++row) {
        size_t piv = row;
        while (piv < nrows && m[piv][lead] == 0) ++piv;
        if (piv == nrows) {
            --row;
            ++lead;
            continue;
        }
        std::swap(m[row], m[piv]);
        Rat inv = Rat(1) / m[row][lead];
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][lead] == 0) continue;
            Rat f = m[r][lead];
            for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        ++lead;
    }
    for (const auto& row : m) {
        bool zero_coeffs = true;
        for (size_t c = 0; c < ncols_coeff; ++c) zero_coeffs &= (row[c] == 0);
        if (zero_coeffs && row[ncols_coeff] != 0) return false;
    }
    return true;
}

Relation scale_to_integers(const std::vector<Rat>& row, size_t ncols_coeff) {
    Int denom(1);
    for (size_t c = 0; c <= ncols_coeff; ++c) denom = int_lcm(denom, row[c].get_den());
    Relation rel;
    rel.coeffs.resize(ncols_coeff);
    Int content(0);
    for (size_t c = 0; c < ncols_coeff; ++c) {
        rel.coeffs[c] = Rat(row[c] * Rat(denom)).get_num();
        content = int_gcd(content, rel.coeffs[c]);
    }
    rel.constant = Rat(row[ncols_coeff] * Rat(denom)).get_num();
    content = int_gcd(content, rel.constant);
    if (content > 1) {
        for (auto& c : rel.coeffs) c /= content;
        rel.constant /= content;
    }
    for (const auto& c : rel.coeffs) {
        if (c == 0) continue;
        if (c < 0) {
            for (auto& x : rel.coeffs) x = -x;
            rel.constant = -rel.constant;
        }
        break;
    }
    return rel;
}

}  // namespace

RelationSet solution_relations(const LinearSystem& sys) {
    RelationSet out;
    out.unknowns = sys.unknowns;
    size_t ncols = sys.unknowns.size();
    std::vector<std::vector<Rat>> m;
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        std::vector<Rat> row = sys.rows[r];
        row.push_back(sys.rhs[r]);
        m.push_back(std::move(row));
    }
    out.consistent = rref(m, ncols);
    if (!out.consistent) return out;
    for (const auto& row : m) {
        bool zero = true;
        for (size_t c = 0; c <= ncols; ++c) zero &= (row[c] == 0);
        if (!zero) out.relations.push_back(scale_to_integers(row, ncols));
    }
    return out;
}

bool relations_equivalent(const RelationSet& a, const RelationSet& b) {
    if (!a.consistent || !b.consistent) return a.consistent == b.consistent;
    if (a.unknowns != b.unknowns) return false;
    size_t ncols = a.unknowns.size();

    auto to_rows = [ncols](const RelationSet& s) {
        std::vector<std::vector<Rat>> rows;
        for (const auto& rel : s.relations) {
            std::vector<Rat> row(ncols + 1);
            for (size_t c = 0; c < ncols; ++c) row[c] = Rat(rel.coeffs[c]);
            row[ncols] = Rat(rel.constant);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    // Each side's relations must reduce to zero against the other side's span.
    auto implied = [ncols](std::vector<std::vector<Rat>> span,
                           const std::vector<std::vector<Rat>>& test) {
        if (!rref(span, ncols)) return false;
        for (auto row : test) {
            for (const auto& srow : span) {
                size_t piv = ncols + 1;
                for (size_t c = 0; c < ncols; ++c)
                    if (srow[c] != 0) {
                        piv = c;
                        break;
                    }
                if (piv > ncols) continue;
                Rat f = row[piv] / srow[piv];
                if (f == 0) continue;
                for (size_t c = 0; c <= ncols; ++c) row[c] -= f * srow[c];
            }
            for (size_t c = 0; c <= ncols; ++c)
                if (row[c] != 0) return false;
        }
        return true;
    };
    auto ra = to_rows(a), rb = to_rows(b);
    return implied(ra, rb) && implied(rb, ra);
}

bool relation_holds(const Relation& rel, const std::vector<long>& assignment) {
    if (rel.coeffs.size() != assignment.size())
        throw std::invalid_argument("assignment size mismatch");
    Int acc(0);
    for (size_t i = 0; i < assignment.size(); ++i) acc += rel.coeffs[i] * assignment[i];
    return acc == rel.constant;
}

std::vector<std::vector<long>> solve_nonneg_integer(const LinearSystem& sys,
                                                    const SolveBounds& bounds) {
    const size_t nunk = sys.unknowns.size();
    // Scale every equation to integers once; the search then runs in plain
    // integer arithmetic (coefficients here are tiny).
    std::vector<std::vector<long>> eq;   // per equation: coeffs then -rhs
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        Int denom(1);
        for (const auto& c : sys.rows[r]) denom = int_lcm(denom, c.get_den());
        denom = int_lcm(denom, sys.rhs[r].get_den());
        std::vector<long> row(nunk + 1);
        bool all_zero = true;
        for (size_t c = 0; c < nunk; ++c) {
            Int v = Rat(sys.rows[r][c] * Rat(denom)).get_num();
            if (!v.fits_slong_p()) throw std::overflow_error("system coefficient too large");
            row[c] = v.get_si();
            all_zero &= (row[c] == 0);
        }
        Int v = Rat(sys.rhs[r] * Rat(denom)).get_num();
        if (!v.fits_slong_p()) throw std::overflow_error("system constant too large");
        row[nunk] = v.get_si();
        if (all_zero && row[nunk] != 0) return {};  // plainly inconsistent
        if (all_zero && row[nunk] == 0) continue;   // trivial equation
        eq.push_back(std::move(row));
    }

    std::vector<long> lo(nunk, 0), hi(nunk, bounds.a_max);
    for (size_t c = 0; c < nunk; ++c) {
        if (sys.unknowns[c] == "alpha") {
            lo[c] = bounds.alpha_min;
            hi[c] = bounds.alpha_max;
        }
    }

    std::vector<std::vector<long>> solutions;
    std::vector<long> cur(nunk, 0);
    std::vector<long> acc(eq.size(), 0);  // partial sums
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == nunk) {
            for (size_t e = 0; e < eq.size(); ++e)
                if (acc[e] != eq[e][nunk]) return;
            solutions.push_back(cur);
            return;
        }
        for (long v = lo[idx]; v <= hi[idx]; ++v) {
            cur[idx] = v;
            for (size_t e = 0; e < eq.size(); ++e) acc[e] += eq[e][idx] * v;
            self(self, idx + 1);
            for (size_t e = 0; e < eq.size(); ++e) acc[e] -= eq[e][idx] * v;
        }
        cur[idx] = 0;
    };
    rec(rec, 0);
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

bool holo_identity_holds(const LinearSystem& sys, const std::vector<long>& assignment) {
    if (assignment.size() != sys.unknowns.size())
        throw std::invalid_argument("assignment size mismatch");
    unsigned n = sys.order;
    CycNum acc(n);
    size_t idx = 0;
    for (const auto& t : sys.point_types) {
        acc += holo_term_point(n, t.i, t.j) * Rat(assignment[idx]);
        ++idx;
    }
    if (sys.has_alpha) {
        acc += holo_term_curve(n) * Rat(assignment[idx]);
        ++idx;
    }
    CycNum lhs = CycNum(n, Rat(1)) + CycNum::zeta_pow(n, -sys.character);
    return acc == lhs;
}

std::optional<EigenRanks> try_eigen_ranks(int n_sigma, int alpha, int m) {
    if (m != 3 && m != 6 && m != 9) throw std::invalid_argument("m must be 3, 6 or 9");
    int num = 24 - 2 * m - n_sigma - 2 * alpha;
    if (num < 0 || num % 3 != 0) return std::nullopt;
    EigenRanks e;
    e.l = num / 3;
    e.r = e.l + n_sigma + 2 * alpha - 2;
    e.s = m / 3;
    e.m = m;
    if (e.r < 1) return std::nullopt;
    return e;
}

EigenRanks eigen_ranks_from_counts(int n_sigma, int alpha, int m) {
    auto e = try_eigen_ranks(n_sigma, alpha, m);
    if (!e)
        throw std::domain_error("geometrically impossible: no nonnegative integral (r,l) for n_sigma=" +
                                std::to_string(n_sigma) + ", alpha=" + std::to_string(alpha) +
                                ", m=" + std::to_string(m));
    return *e;
}

int chi_fix_order3(int m) {
    if (m != 3 && m != 6 && m != 9) throw std::invalid_argument("m must be 3, 6 or 9");
    return 24 - 3 * m;
}

}  // namespace k3nine::lefschetz
