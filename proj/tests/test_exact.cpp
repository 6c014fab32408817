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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3nine/qpoly.hpp"

using namespace k3nine;

namespace {

std::mt19937_64 rng(20260809);

Rat random_rat(long num_range = 9, bool allow_fraction = true) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, allow_fraction ? 5 : 1);
    return make_rat(Int(num(rng)), Int(den(rng)));
}

QPoly random_poly(int max_deg, bool allow_fraction = true) {
    std::uniform_int_distribution<int> d(0, max_deg);
    int deg = d(rng);
    std::vector<Rat> cs(static_cast<size_t>(deg) + 1);
    for (auto& c : cs) c = random_rat(9, allow_fraction);
    if (cs.back() == 0) cs.back() = Rat(1);
    return QPoly(cs);
}

// Independent oracle: resultant as the Sylvester determinant, computed by
// exact Gaussian elimination. Never touches the subresultant code path.
Rat sylvester_resultant(const QPoly& p, const QPoly& q) {
    int m = p.degree(), n = q.degree();
    int dim = m + n;
    if (dim == 0) return Rat(1);
    std::vector<std::vector<Rat>> s(static_cast<size_t>(dim),
                                    std::vector<Rat>(static_cast<size_t>(dim), Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = p.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = q.coeff(n - k);
    Rat det(1);
    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int r = col; r < dim; ++r)
            if (s[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        Rat inv = Rat(1) / s[col][col];
        for (int r = col + 1; r < dim; ++r) {
            if (s[r][col] == 0) continue;
            Rat f = s[r][col] * inv;
            for (int c = col; c < dim; ++c) s[r][c] -= f * s[col][c];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("rational field axioms on randomized inputs") {
    for (int i = 0; i < 300; ++i) {
        Rat a = random_rat(50), b = random_rat(50), c = random_rat(50);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (Rat(1) / a) == 1);
    }
    CHECK(make_rat(Int(6), Int(-4)) == Rat(-3, 2));
    CHECK(make_rat(Int(6), Int(-4)).get_den() == 2);
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("polynomial grammar: parse and print") {
    QPoly p = parse_poly("t*(t^3-1)*(t^3-2)^2");
    CHECK(p.degree() == 10);
    CHECK(p.leading() == 1);
    CHECK(p.eval(Rat(1)) == 0);
    CHECK(p.eval(Rat(2)) == 2 * 7 * 36);

    CHECK(parse_poly("-3") == QPoly(Rat(-3)));
    CHECK(parse_poly("5/7") == QPoly(Rat(5, 7)));
    CHECK(parse_poly(" - 3 * x ^ 2 + 1/2 ").coeff(2) == -3);
    CHECK(parse_poly("x^2 - (x - 1)*(x + 1)") == QPoly(Rat(1), "x"));
    CHECK(parse_poly("2^3") == QPoly(Rat(8)));
    CHECK(parse_poly("--t") == QPoly::variable("t"));

    CHECK_THROWS_AS(parse_poly("x + y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("(1+t"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("t^-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("(1+t)/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("t t"), std::invalid_argument);

    for (int i = 0; i < 50; ++i) {
        QPoly q = random_poly(6);
        CHECK(parse_poly(q.str()) == q);
    }
}

TEST_CASE("division and variable handling") {
    QPoly t = QPoly::variable();
    auto [q, r] = QPoly::divrem(t.pow(3) - QPoly(1L), t - QPoly(1L));
    CHECK(r.is_zero());
    CHECK(q == t * t + t + QPoly(1L));
    CHECK_THROWS_AS(QPoly::divrem(t, QPoly()), std::domain_error);
    CHECK_THROWS_AS(QPoly::variable("x") + QPoly::variable("y"), std::invalid_argument);
    CHECK(QPoly::variable("x") + QPoly(Rat(2), "y") == parse_poly("x + 2"));
    CHECK_THROWS_AS(QPoly().degree(), std::logic_error);
    CHECK(!QPoly().degree_opt().has_value());
}

TEST_CASE("poly_gcd spec examples") {
    QPoly t = QPoly::variable();
    CHECK(poly_gcd(t * t - QPoly(1L), t - QPoly(1L)) == t - QPoly(1L));

    QPoly p = parse_poly("6*t^2 - 6");
    CHECK(poly_gcd(p, QPoly()) == parse_poly("t^2 - 1"));
    CHECK(poly_gcd(QPoly(), QPoly()).is_zero());

    QPoly cube = parse_poly("t^3 - 2");
    CHECK(poly_gcd(t * cube.pow(2), cube) == cube);
}

TEST_CASE("poly_gcd divides both inputs exactly") {
    for (int i = 0; i < 100; ++i) {
        QPoly a = random_poly(5), b = random_poly(5);
        QPoly g = poly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(divides_exactly(g, a));
        CHECK(divides_exactly(g, b));
        // common-factor sanity: gcd(a*c, b*c) is divisible by monic c
        QPoly c = random_poly(3);
        if (!c.is_zero() && !a.is_zero() && !b.is_zero()) {
            QPoly g2 = poly_gcd(a * c, b * c);
            CHECK(divides_exactly(c.monic(), g2));
        }
    }
}

TEST_CASE("squarefree decomposition spec examples") {
    QPoly t = QPoly::variable();
    QPoly cube = parse_poly("t^3 - 2");

    auto dec = squarefree_decomposition(t.pow(4) * cube.pow(2));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == cube);
    CHECK(dec[0].second == 2);
    CHECK(dec[1].first == t);
    CHECK(dec[1].second == 4);

    QPoly sf = parse_poly("3*t^2 + 3*t + 3");
    auto dec2 = squarefree_decomposition(sf);
    REQUIRE(dec2.size() == 1);
    CHECK(dec2[0].first == sf.monic());
    CHECK(dec2[0].second == 1);

    auto dec3 = squarefree_decomposition(parse_poly("t^4*(t^3-5)*(t^3-7)"));
    REQUIRE(dec3.size() == 2);
    CHECK(dec3[0].first == parse_poly("(t^3-5)*(t^3-7)"));
    CHECK(dec3[0].second == 1);
    CHECK(dec3[1].first == t);
    CHECK(dec3[1].second == 4);

    CHECK_THROWS_AS(squarefree_decomposition(QPoly()), std::invalid_argument);
}

TEST_CASE("squarefree decomposition reconstructs randomized products") {
    std::uniform_int_distribution<int> nfac(1, 4), mult(1, 4), root(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        // distinct linear factors with random multiplicities
        std::vector<long> roots;
        int k = nfac(rng);
        while (static_cast<int>(roots.size()) < k) {
            long r = root(rng);
            bool dup = false;
            for (long x : roots) dup |= (x == r);
            if (!dup) roots.push_back(r);
        }
        QPoly p(random_rat(5, true));
        while (p.is_zero()) p = QPoly(random_rat(5, true));
        std::vector<int> mults(roots.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            mults[i] = mult(rng);
            p *= (QPoly::variable() - QPoly(Rat(roots[i]))).pow(static_cast<unsigned>(mults[i]));
        }
        auto dec = squarefree_decomposition(p);
        // reconstruct
        QPoly rec(p.leading());
        for (const auto& [s, m] : dec) rec *= s.pow(static_cast<unsigned>(m));
        CHECK(rec == p);
        // multiplicities strictly increasing, factors pairwise coprime and squarefree
        for (size_t i = 0; i + 1 < dec.size(); ++i) CHECK(dec[i].second < dec[i + 1].second);
        for (size_t i = 0; i < dec.size(); ++i) {
            CHECK(poly_gcd(dec[i].first, dec[i].first.derivative()).is_constant());
            for (size_t j = i + 1; j < dec.size(); ++j)
                CHECK(poly_gcd(dec[i].first, dec[j].first).is_constant());
        }
    }
}

TEST_CASE("coprime refinement spec examples") {
    auto as_set = [](std::vector<QPoly> v) {
        std::sort(v.begin(), v.end(),
                  [](const QPoly& a, const QPoly& b) { return QPoly::compare(a, b) < 0; });
        return v;
    };
    auto basis = coprime_refinement({parse_poly("t^2-1"), parse_poly("t-1")});
    CHECK(basis == as_set({parse_poly("t-1"), parse_poly("t+1")}));

    CHECK(coprime_refinement({parse_poly("t")}) == std::vector<QPoly>{parse_poly("t")});

    auto basis2 = coprime_refinement({parse_poly("t^3"), parse_poly("t^2*(t-1)")});
    CHECK(basis2 == as_set({parse_poly("t"), parse_poly("t-1")}));

    CHECK(coprime_refinement({}).empty());
    // multiplicity structure inside a single input is separated
    auto basis3 = coprime_refinement({parse_poly("t^2*(t+1)")});
    CHECK(basis3 == as_set({parse_poly("t"), parse_poly("t+1")}));
}

TEST_CASE("coprime refinement: pairwise coprime and reconstructs inputs") {
    std::uniform_int_distribution<int> nin(1, 4), nfac(1, 3), mult(1, 3), root(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<QPoly> inputs;
        int n = nin(rng);
        for (int i = 0; i < n; ++i) {
            QPoly p(Rat(1));
            int k = nfac(rng);
            for (int j = 0; j < k; ++j) {
                QPoly f = QPoly::variable() - QPoly(Rat(root(rng)));
                p *= f.pow(static_cast<unsigned>(mult(rng)));
            }
            inputs.push_back(p);
        }
        auto basis = coprime_refinement(inputs);
        for (size_t i = 0; i < basis.size(); ++i) {
            CHECK(basis[i].leading() == 1);
            CHECK(poly_gcd(basis[i], basis[i].derivative()).is_constant());
            for (size_t j = i + 1; j < basis.size(); ++j)
                CHECK(poly_gcd(basis[i], basis[j]).is_constant());
        }
        for (const auto& p : inputs) {
            QPoly rec(p.leading());
            for (const auto& q : basis) {
                int m = p.is_constant() ? 0 : multiplicity(q, p);
                if (m > 0) rec *= q.pow(static_cast<unsigned>(m));
            }
            CHECK(rec == p);
        }
    }
}

TEST_CASE("resultant spec examples") {
    CHECK(resultant(parse_poly("t-2"), parse_poly("t-3")) == -1);
    CHECK(abs(resultant(parse_poly("t-2"), parse_poly("t-3"))) == 1);
    CHECK(resultant(parse_poly("t-2"), parse_poly("t-2")) == 0);
    CHECK(resultant(parse_poly("t^2-1"), parse_poly("t^2-4")) == 9);
    CHECK_THROWS_AS(resultant(parse_poly("x^2-1"), parse_poly("t-1")), std::invalid_argument);
}

TEST_CASE("resultant matches the Sylvester determinant oracle") {
    for (int trial = 0; trial < 120; ++trial) {
        QPoly p = random_poly(5), q = random_poly(5);
        if (p.is_zero() || q.is_zero() || p.is_constant() || q.is_constant()) continue;
        CHECK(resultant(p, q) == sylvester_resultant(p, q));
    }
    // multiplicativity in the second argument
    for (int trial = 0; trial < 40; ++trial) {
        QPoly p = random_poly(4), q = random_poly(3), r = random_poly(3);
        if (p.is_constant() || q.is_zero() || r.is_zero()) continue;
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
    // zero iff common root
    QPoly common = parse_poly("t^2 - 3");
    CHECK(resultant(common * parse_poly("t - 1"), common * parse_poly("t + 5")) == 0);
}
