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

#include "cofactor_det.hpp"
#include "k3nine/lattice.hpp"

using namespace k3nine;
using namespace k3nine::lattice;

namespace {

std::mt19937_64 rng(31415);

Gram random_symmetric(int n, long range = 5) {
    std::uniform_int_distribution<long> dist(-range, range);
    Gram g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g.at(i, j) = Int(dist(rng));
            g.at(j, i) = g.at(i, j);
        }
    return g;
}

Gram gram_of(const std::string& expr) { return gram(parse_lattice_expr(expr)); }

// The eight trailing-lattice rows of the classification table, with m.
const std::vector<std::pair<std::string, int>> kTableLattices = {
    {"U(3)+A2", 9},    {"U+A2", 9},      {"U(3)+A2^4", 6}, {"U+A2^4", 6},
    {"U+E6+A2", 6},    {"U+E8", 6},      {"U+E6^2+A2", 3}, {"U+E6+E8", 3},
};

}  // namespace

TEST_CASE("gram matrices of the atoms") {
    Gram u = gram_of("U");
    CHECK(u.n == 2);
    CHECK(u.at(0, 0) == 0);
    CHECK(u.at(0, 1) == 1);
    CHECK(u.at(1, 0) == 1);
    CHECK(u.at(1, 1) == 0);

    Gram a2 = gram_of("A2");
    CHECK(a2.n == 2);
    CHECK(a2.at(0, 0) == -2);
    CHECK(a2.at(0, 1) == 1);
    CHECK(a2.at(1, 1) == -2);

    Gram block = gram_of("U(3)+A2");
    CHECK(block.n == 4);
    CHECK(block.at(0, 1) == 3);
    CHECK(block.at(1, 0) == 3);
    CHECK(block.at(2, 2) == -2);
    CHECK(block.at(2, 3) == 1);
    CHECK(block.at(0, 2) == 0);

    CHECK(gram_of("E6").n == 6);
    CHECK(gram_of("E8").n == 8);
    CHECK(gram_of("A2^4").n == 8);
    CHECK(block.is_symmetric());

    CHECK_THROWS_AS(parse_lattice_expr("E7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_expr("U(0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_expr("A2^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_expr("U+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_expr("D4"), std::invalid_argument);
    CHECK(parse_lattice_expr("U(3) + A2 ^ 4").str() == "U(3)+A2^4");
}

TEST_CASE("rank, determinant, signature") {
    CHECK(determinant(gram_of("U+E8")) == -1);
    CHECK(rank(gram_of("U+E6+E8")) == 16);
    CHECK(determinant(gram_of("U(3)+A2")) == -27);
    CHECK(signature(gram_of("U(3)+A2")) == std::pair<int, int>{1, 3});
    CHECK(signature(gram_of("U")) == std::pair<int, int>{1, 1});
    CHECK(signature(gram_of("E8")) == std::pair<int, int>{0, 8});
    CHECK(determinant(gram_of("A1")) == -2);
    CHECK(determinant(gram_of("E6")) == 3);
}

TEST_CASE("smith normal form") {
    CHECK(smith_normal_form(gram_of("U")) == std::vector<Int>{Int(1), Int(1)});
    CHECK(smith_normal_form(gram_of("A2")) == std::vector<Int>{Int(1), Int(3)});

    auto f = smith_normal_form(gram_of("U(3)+A2"));
    CHECK(f == std::vector<Int>{Int(1), Int(3), Int(3), Int(3)});
    CHECK(discriminant_group_order(f) == 27);
    CHECK(discriminant_group_name(f) == "Z/3 x Z/3 x Z/3");
    CHECK(discriminant_group_name(smith_normal_form(gram_of("U"))) == "trivial");

    Gram zero(3);
    CHECK_THROWS_AS(smith_normal_form(zero), std::domain_error);
}

TEST_CASE("evenness") {
    CHECK(is_even(gram_of("U")));
    CHECK(is_even(gram_of("E8")));
    Gram odd(1);
    odd.at(0, 0) = 1;
    CHECK(!is_even(odd));
}

TEST_CASE("the eight classification-table lattices") {
    const std::vector<long> expected_dets = {-27, -3, -729, -81, -9, -1, -27, -3};
    for (size_t i = 0; i < kTableLattices.size(); ++i) {
        const auto& [expr, m] = kTableLattices[i];
        CAPTURE(expr);
        Gram g = gram_of(expr);
        CHECK(rank(g) == 22 - 2 * m);
        CHECK(signature(g) == std::pair<int, int>{1, rank(g) - 1});
        CHECK(is_even(g));
        Int det = determinant(g);
        CHECK(det == expected_dets[i]);
        CHECK(det == cofactor_determinant(g));
        auto snf = smith_normal_form(g);
        CHECK(discriminant_group_order(snf) == abs(det));
    }
}

TEST_CASE("determinant is multiplicative on block sums") {
    const std::vector<std::string> atoms = {"U", "U(3)", "A2", "E6", "A1", "A3"};
    std::uniform_int_distribution<size_t> pick(0, atoms.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::string a = atoms[pick(rng)], b = atoms[pick(rng)];
        CHECK(determinant(gram_of(a + "+" + b)) ==
              determinant(gram_of(a)) * determinant(gram_of(b)));
    }
}

TEST_CASE("signature and SNF properties on random symmetric matrices") {
    std::uniform_int_distribution<int> size(1, 8);
    int nonsingular = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Gram g = random_symmetric(size(rng));
        Int det = determinant(g);
        CHECK(det == cofactor_determinant(g));
        auto [p, q] = signature(g);
        CHECK(p + q == rank(g));
        if (det == 0) {
            CHECK(rank(g) < g.n);
            continue;
        }
        ++nonsingular;
        CHECK(p + q == g.n);
        // sign of the determinant is (-1)^q for a nondegenerate form
        CHECK((det > 0) == (q % 2 == 0));
        auto snf = smith_normal_form(g);
        CHECK(discriminant_group_order(snf) == abs(det));
        for (size_t i = 0; i + 1 < snf.size(); ++i) {
            CHECK(snf[i] > 0);
            CHECK(snf[i + 1] % snf[i] == 0);
        }
    }
    CHECK(nonsingular > 50);
}
