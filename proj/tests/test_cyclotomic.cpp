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

#include "k3nine/cyclotomic.hpp"

using namespace k3nine;

namespace {

std::mt19937_64 rng(97);

CycNum random_cyc(unsigned n) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rat> cs(euler_phi(n));
    for (auto& c : cs) c = make_rat(Int(num(rng)), Int(den(rng)));
    return CycNum::from_coords(n, std::move(cs));
}

}  // namespace

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(60) == 16);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == parse_poly("x - 1"));
    CHECK(cyclotomic_polynomial(9) == parse_poly("x^6 + x^3 + 1"));
    CHECK(cyclotomic_polynomial(3) == parse_poly("x^2 + x + 1"));
    CHECK(cyclotomic_polynomial(2) == parse_poly("x + 1"));
    CHECK(cyclotomic_polynomial(12) == parse_poly("x^4 - x^2 + 1"));
    // product over divisors reproduces x^n - 1
    for (unsigned n : {6u, 9u, 10u, 18u}) {
        QPoly prod(Rat(1), "x");
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic_polynomial(d);
        QPoly xn = QPoly::monomial(Rat(1), static_cast<int>(n), "x") - QPoly(Rat(1), "x");
        CHECK(prod == xn);
    }
}

TEST_CASE("zeta powers and reduction") {
    CHECK(CycNum::zeta_pow(9, 9) == CycNum(9, Rat(1)));
    CHECK(CycNum::zeta_pow(9, -1) == CycNum::zeta_pow(9, 8));

    // zeta_9^6 reduces to -1 - zeta^3
    std::vector<Rat> expect(6, Rat(0));
    expect[0] = Rat(-1);
    expect[3] = Rat(-1);
    CHECK(CycNum::zeta_pow(9, 6).coords() == expect);

    // zeta_3^2 reduces to -1 - zeta
    CHECK(CycNum::zeta_pow(3, 2).coords() == std::vector<Rat>{Rat(-1), Rat(-1)});
}

TEST_CASE("spec arithmetic identities in Q(zeta_9)") {
    CycNum z = CycNum::zeta(9);
    CycNum one(9, Rat(1));

    CHECK((z.galois_conjugate(1) == z));
    CHECK((CycNum::zeta_pow(9, 6) + CycNum::zeta_pow(9, 3) + one).is_zero());
    CHECK(z * CycNum::zeta_pow(9, 8) == one);

    // prod over primitive exponents of (1 - zeta^k) = Phi_9(1) = 3
    CycNum prod = one;
    for (long k : {1, 2, 4, 5, 7, 8}) prod *= (one - CycNum::zeta_pow(9, k));
    CHECK(prod == CycNum(9, Rat(3)));
}

TEST_CASE("inverse") {
    CycNum one(9, Rat(1));
    CHECK(one.inverse() == one);
    CHECK(CycNum::zeta(9).inverse() == CycNum::zeta_pow(9, 8));
    CycNum a = (one - CycNum::zeta(9)) * (one - CycNum::zeta_pow(9, 8));
    CHECK(a.inverse() * a == one);
    CHECK_THROWS_AS(CycNum(9).inverse(), std::domain_error);
}

TEST_CASE("galois conjugation") {
    CycNum z = CycNum::zeta(9);
    CHECK(z.galois_conjugate(8) == CycNum::zeta_pow(9, 8));
    CycNum a = CycNum(9, Rat(1)) + CycNum::zeta_pow(9, 3);
    CHECK(a.galois_conjugate(2) == CycNum(9, Rat(1)) + CycNum::zeta_pow(9, 6));
    CHECK(CycNum(9, Rat(5, 3)).galois_conjugate(4) == CycNum(9, Rat(5, 3)));
    CHECK_THROWS_AS(z.galois_conjugate(3), std::invalid_argument);
    CHECK_THROWS_AS((CycNum(9) + CycNum(3)), std::invalid_argument);
}

TEST_CASE("rational coordinates") {
    CycNum r(9, Rat(5, 3));
    CHECK(r.is_rational());
    CHECK(r.coords()[0] == Rat(5, 3));
    for (size_t i = 1; i < 6; ++i) CHECK(r.coords()[i] == 0);

    CycNum z = CycNum::zeta(9);
    CHECK(z.coords() == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(!z.is_rational());
    CHECK_THROWS_AS(z.rational_value(), std::domain_error);

    // (1+zeta)/(1-zeta)^2 round trip
    CycNum one(9, Rat(1));
    CycNum num = one + z;
    CycNum den = (one - z) * (one - z);
    CycNum val = num * den.inverse();
    CHECK(val * den == num);
}

TEST_CASE("field axioms on randomized inputs, n in {3,9}") {
    for (unsigned n : {3u, 9u}) {
        for (int i = 0; i < 250; ++i) {
            CycNum a = random_cyc(n), b = random_cyc(n), c = random_cyc(n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(n, Rat(1)));
        }
    }
}

TEST_CASE("norms") {
    CycNum one(9, Rat(1));
    CHECK((one - CycNum::zeta(9)).norm() == 3);
    CHECK(CycNum(9, Rat(2)).norm() == 64);  // 2^phi(9)
    for (unsigned n : {3u, 9u}) {
        for (int i = 0; i < 40; ++i) {
            CycNum a = random_cyc(n);
            if (a.is_zero()) continue;
            CHECK(a.norm() != 0);
        }
    }
}

TEST_CASE("galois conjugation is a ring automorphism") {
    for (unsigned n : {3u, 9u}) {
        std::vector<long> ks;
        for (long k = 1; k < static_cast<long>(n); ++k)
            if (std::gcd(k, static_cast<long>(n)) == 1) ks.push_back(k);
        for (int i = 0; i < 60; ++i) {
            CycNum a = random_cyc(n), b = random_cyc(n);
            for (long k : ks) {
                CHECK((a + b).galois_conjugate(k) ==
                      a.galois_conjugate(k) + b.galois_conjugate(k));
                CHECK((a * b).galois_conjugate(k) ==
                      a.galois_conjugate(k) * b.galois_conjugate(k));
            }
        }
    }
}

TEST_CASE("symbolic printing") {
    CycNum z = CycNum::zeta(9);
    CHECK(CycNum(9).str() == "0");
    CHECK((CycNum(9, Rat(1)) - z).str() == "1 - zeta");
    CHECK((z * Rat(2, 3)).str() == "2/3*zeta");
    CHECK(CycNum::zeta_pow(9, 6).str() == "-1 - zeta^3");
}
