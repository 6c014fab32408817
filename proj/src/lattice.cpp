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

#include "k3nine/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k3nine::lattice {

bool Gram::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::string LatticeExpr::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << "+";
        first = false;
        switch (t.kind) {
            case Kind::U:
                os << "U";
                if (t.scale != 1) os << "(" << to_string(t.scale) << ")";
                break;
            case Kind::A: os << "A" << t.param; break;
            case Kind::E: os << "E" << t.param; break;
        }
        if (t.repeat != 1) os << "^" << t.repeat;
    }
    return os.str();
}

LatticeExpr parse_lattice_expr(const std::string& text) {
    LatticeExpr expr;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("lattice expression error at position " +
                                    std::to_string(pos) + ": " + msg);
    };
    auto integer = [&]() -> long {
        skip();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(text.substr(start, pos - start));
    };
    while (true) {
        skip();
        if (pos >= text.size()) fail("expected lattice atom");
        char c = text[pos];
        LatticeExpr::Term term;
        if (c == 'U') {
            ++pos;
            term.kind = LatticeExpr::Kind::U;
            skip();
            if (pos < text.size() && text[pos] == '(') {
                ++pos;
                long lambda = integer();
                if (lambda == 0) fail("U(0) is degenerate");
                term.scale = Int(lambda);
                skip();
                if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
                ++pos;
            }
        } else if (c == 'A' || c == 'E') {
            ++pos;
            long param = integer();
            if (c == 'A') {
                if (param < 1) fail("A_n needs n >= 1");
                term.kind = LatticeExpr::Kind::A;
            } else {
                if (param != 6 && param != 8) fail("only E6 and E8 are supported");
                term.kind = LatticeExpr::Kind::E;
            }
            term.param = static_cast<int>(param);
        } else {
            fail(std::string("unsupported atom '") + c + "'");
        }
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            long rep = integer();
            if (rep < 1) fail("exponent must be >= 1");
            term.repeat = static_cast<int>(rep);
        }
        expr.terms.push_back(term);
        skip();
        if (pos >= text.size()) break;
        if (text[pos] != '+') fail("expected '+'");
        ++pos;
    }
    return expr;
}

namespace {

// Dynkin-diagram edges, Bourbaki numbering (branch node attached to node 4).
const std::vector<std::pair<int, int>> kE6Edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
const std::vector<std::pair<int, int>> kE8Edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6},
                                                   {6, 7}, {7, 8}, {2, 4}};

Gram root_lattice(int n, const std::vector<std::pair<int, int>>& edges) {
    Gram g(n);
    for (int i = 0; i < n; ++i) g.at(i, i) = -2;
    for (auto [a, b] : edges) {
        g.at(a - 1, b - 1) = 1;
        g.at(b - 1, a - 1) = 1;
    }
    return g;
}

Gram a_lattice(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return root_lattice(n, edges);
}

Gram u_lattice(const Int& lambda) {
    Gram g(2);
    g.at(0, 1) = lambda;
    g.at(1, 0) = lambda;
    return g;
}

void append_block(Gram& g, int& offset, const Gram& block) {
    for (int i = 0; i < block.n; ++i)
        for (int j = 0; j < block.n; ++j) g.at(offset + i, offset + j) = block.at(i, j);
    offset += block.n;
}

}  // namespace

Gram gram(const LatticeExpr& expr) {
    int dim = 0;
    for (const auto& t : expr.terms) {
        int block = t.kind == LatticeExpr::Kind::U ? 2
                  : t.kind == LatticeExpr::Kind::A ? t.param
                                                   : t.param;
        dim += block * t.repeat;
    }
    if (dim == 0) throw std::invalid_argument("empty lattice expression");
    Gram g(dim);
    int offset = 0;
    for (const auto& t : expr.terms) {
        for (int r = 0; r < t.repeat; ++r) {
            switch (t.kind) {
                case LatticeExpr::Kind::U: append_block(g, offset, u_lattice(t.scale)); break;
                case LatticeExpr::Kind::A: append_block(g, offset, a_lattice(t.param)); break;
                case LatticeExpr::Kind::E:
                    append_block(g, offset,
                                 root_lattice(t.param, t.param == 6 ? kE6Edges : kE8Edges));
                    break;
            }
        }
    }
    return g;
}

int rank(const Gram& g) {
    // rational Gaussian elimination
    std::vector<std::vector<Rat>> m(static_cast<size_t>(g.n),
                                    std::vector<Rat>(static_cast<size_t>(g.n)));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) m[i][j] = Rat(g.at(i, j));
    int rk = 0;
    int col = 0;
    for (int row = 0; row < g.n && col < g.n; ++col) {
        int piv = -1;
        for (int r = row; r < g.n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (int r = row + 1; r < g.n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (int c = col; c < g.n; ++c) m[r][c] -= f * m[row][c];
        }
        ++rk;
        ++row;
    }
    return rk;
}

Int determinant(const Gram& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
    // Bareiss fraction-free elimination
    int n = g.n;
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = g.at(i, j);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Int(0);
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::pair<int, int> signature(const Gram& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
    // Congruence diagonalization with rational pivots; zero diagonals are
    // resolved through the hyperbolic row/column-addition pivot.
    int n = g.n;
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(g.at(i, j));
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int swap_d = -1, off = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][r] != 0) {
                    swap_d = r;
                    break;
                }
            if (swap_d >= 0) {
                std::swap(m[swap_d], m[k]);
                for (int r = 0; r < n; ++r) std::swap(m[r][swap_d], m[r][k]);
            } else {
                for (int c = k + 1; c < n; ++c)
                    if (m[k][c] != 0) {
                        off = c;
                        break;
                    }
                if (off < 0) continue;  // zero row within the remaining block
                // row/col k += row/col off turns the off-diagonal entry into
                // a nonzero diagonal (2*m[k][off])
                for (int c = 0; c < n; ++c) m[k][c] += m[off][c];
                for (int r = 0; r < n; ++r) m[r][k] += m[r][off];
            }
        }
        if (m[k][k] == 0) continue;
        if (m[k][k] > 0)
            ++pos;
        else
            ++neg;
        Rat inv = Rat(1) / m[k][k];
        for (int r = 0; r < n; ++r) {
            if (r == k || m[r][k] == 0) continue;
            Rat f = m[r][k] * inv;
            for (int c = 0; c < n; ++c) m[r][c] -= f * m[k][c];
        }
        for (int c = 0; c < n; ++c)
            if (c != k) m[k][c] = Rat(0);
    }
    return {pos, neg};
}

std::vector<Int> smith_normal_form(const Gram& g) {
    int n = g.n;
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = g.at(i, j);

    for (int t = 0; t < n; ++t) {
        while (true) {
            // minimal nonzero entry of the trailing block as pivot
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j) {
                    if (m[i][j] == 0) continue;
                    if (pi < 0 || abs(m[i][j]) < abs(m[pi][pj])) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) throw std::domain_error("singular matrix has no Smith normal form here");
            std::swap(m[pi], m[t]);
            for (int r = 0; r < n; ++r) std::swap(m[r][pj], m[r][t]);

            bool clean = true;
            for (int r = t + 1; r < n; ++r) {
                if (m[r][t] == 0) continue;
                Int q = m[r][t] / m[t][t];  // truncated: |remainder| < |pivot|
                if (q != 0)
                    for (int c = t; c < n; ++c) m[r][c] -= q * m[t][c];
                if (m[r][t] != 0) clean = false;
            }
            for (int c = t + 1; c < n; ++c) {
                if (m[t][c] == 0) continue;
                Int q = m[t][c] / m[t][t];
                if (q != 0)
                    for (int r = t; r < n; ++r) m[r][c] -= q * m[r][t];
                if (m[t][c] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: absorb any entry the pivot does not divide
            bool divides_all = true;
            for (int i = t + 1; i < n && divides_all; ++i)
                for (int j = t + 1; j < n && divides_all; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (int c = t; c < n; ++c) m[t][c] += m[i][c];
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }
    std::vector<Int> factors;
    factors.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) factors.push_back(abs(m[t][t]));
    return factors;
}

bool is_even(const Gram& g) {
    for (int i = 0; i < g.n; ++i)
        if (g.at(i, i) % 2 != 0) return false;
    return true;
}

std::string discriminant_group_name(const std::vector<Int>& factors) {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : factors) {
        if (d <= 1) continue;
        if (!first) os << " x ";
        os << "Z/" << to_string(d);
        first = false;
    }
    return first ? "trivial" : os.str();
}

Int discriminant_group_order(const std::vector<Int>& factors) {
    Int order(1);
    for (const auto& d : factors) order *= d;
    return order;
}

}  // namespace k3nine::lattice
