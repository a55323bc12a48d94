/*
   Copyright 2026 The osp-toda Authors

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

#include <algorithm>
#include <set>

#include "osptoda/root_data.hpp"

using namespace osptoda;

namespace {

// Independent enumeration used as the oracle for rho: scan all integer
// vectors with entries in [-2, 2] and classify by the membership
// predicates instead of generating from the constructive lists.
std::vector<RootVec> brute_force_positive_even(int l) {
    std::vector<RootVec> out;
    std::vector<int> v(static_cast<size_t>(l), -2);
    while (true) {
        int nonzero = 0, sum_abs = 0, first = -1, last = -1;
        for (int i = 0; i < l; ++i) {
            if (v[static_cast<size_t>(i)]) {
                ++nonzero;
                sum_abs += std::abs(v[static_cast<size_t>(i)]);
                if (first < 0) first = i;
                last = i;
            }
        }
        bool doubled = nonzero == 1 && sum_abs == 2 && v[static_cast<size_t>(first)] == 2;
        bool pair = nonzero == 2 && sum_abs == 2 && v[static_cast<size_t>(first)] == 1;
        if (doubled || pair) out.push_back(v);
        int k = l - 1;
        while (k >= 0 && v[static_cast<size_t>(k)] == 2) v[static_cast<size_t>(k--)] = -2;
        if (k < 0) break;
        ++v[static_cast<size_t>(k)];
    }
    return out;
}

std::vector<RootVec> brute_force_positive_odd(int l) {
    std::vector<RootVec> out;
    for (int i = 1; i <= l; ++i) {
        RootVec v(static_cast<size_t>(l), 0);
        v[static_cast<size_t>(i - 1)] = 1;
        out.push_back(v);
    }
    return out;
}

long num(const Rational& r) {
    REQUIRE(r.get_den() == 1);
    return r.get_num().get_si();
}

}  // namespace

TEST_CASE("distinguished super system: root counts and parity split") {
    for (int l = 1; l <= 6; ++l) {
        auto rs = RootSystem::make(RootSystemType::B0, l);
        CHECK(static_cast<int>(rs.positive_even.size()) == l * l);
        CHECK(static_cast<int>(rs.positive_odd.size()) == l);
        CHECK(static_cast<int>(rs.simple.size()) == l);
        CHECK(rs.simple[0].parity == 1);
        for (size_t k = 1; k < rs.simple.size(); ++k) CHECK(rs.simple[k].parity == 0);

        auto even = brute_force_positive_even(l);
        std::set<RootVec> got(rs.positive_even.begin(), rs.positive_even.end());
        std::set<RootVec> want(even.begin(), even.end());
        CHECK(got == want);
    }
}

TEST_CASE("B-type Cartan matrix, l = 2..6") {
    for (int l = 2; l <= 6; ++l) {
        auto cm = cartan_matrix(RootSystem::make(RootSystemType::B0, l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                long want = 0;
                if (i == j) want = 2;
                else if (i == 0 && j == 1) want = -2;
                else if (std::abs(i - j) == 1) want = -1;
                CHECK(num(cm[static_cast<size_t>(i)][static_cast<size_t>(j)]) == want);
            }
    }
}

TEST_CASE("rank-1 system has Cartan matrix [2]") {
    auto cm = cartan_matrix(RootSystem::make(RootSystemType::B0, 1));
    REQUIRE(cm.size() == 1);
    CHECK(num(cm[0][0]) == 2);
}

TEST_CASE("non-reduced BC matrix at l = 3 matches the fixed simple order") {
    // Simple order (e_3, 2e_3, e_2-e_3, e_1-e_2).
    auto rs = RootSystem::make(RootSystemType::BC, 3);
    REQUIRE(rs.simple.size() == 4);
    CHECK(root_str(rs.simple[0].vec) == "e3");
    CHECK(root_str(rs.simple[1].vec) == "2e3");
    CHECK(root_str(rs.simple[2].vec) == "e2-e3");
    CHECK(root_str(rs.simple[3].vec) == "e1-e2");
    auto cm = cartan_matrix(rs);
    long want[4][4] = {{2, 4, -2, 0}, {1, 2, -1, 0}, {-1, -2, 2, -1}, {0, 0, -1, 2}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK(num(cm[i][j]) == want[i][j]);
}

TEST_CASE("BC Cartan matrices are degenerate, l = 1..6") {
    for (int l = 1; l <= 6; ++l) {
        auto rs = RootSystem::make(RootSystemType::BC, l);
        CHECK(matrix_det(cartan_matrix(rs)) == 0);
        // The reduced systems are not degenerate.
        CHECK(matrix_det(cartan_matrix(RootSystem::make(RootSystemType::B0, l))) != 0);
        CHECK(matrix_det(cartan_matrix(RootSystem::make(RootSystemType::C, l))) != 0);
    }
}

TEST_CASE("C simple roots sit inside the positive roots of the super system") {
    for (int l = 1; l <= 5; ++l) {
        auto c = RootSystem::make(RootSystemType::C, l);
        auto b0 = RootSystem::make(RootSystemType::B0, l);
        std::set<RootVec> pos(b0.positive_even.begin(), b0.positive_even.end());
        for (const auto& s : c.simple) CHECK(pos.count(s.vec) == 1);
    }
}

TEST_CASE("rho for the super system") {
    auto rs1 = RootSystem::make(RootSystemType::B0, 1);
    WeightVector r1 = rho(rs1);
    CHECK(r1.coords[0] == Rational(1, 2));

    for (int l = 1; l <= 6; ++l) {
        auto rs = RootSystem::make(RootSystemType::B0, l);
        WeightVector r = rho(rs);
        // Closed form l - i + 1/2, and the independent brute-force sum.
        WeightVector oracle(l);
        for (const auto& a : brute_force_positive_even(l))
            for (int i = 0; i < l; ++i) oracle.coords[static_cast<size_t>(i)] += Rational(a[static_cast<size_t>(i)]);
        for (const auto& b : brute_force_positive_odd(l))
            for (int i = 0; i < l; ++i) oracle.coords[static_cast<size_t>(i)] -= Rational(b[static_cast<size_t>(i)]);
        oracle = oracle.scaled(Rational(1, 2));
        CHECK(r == oracle);
        for (int i = 1; i <= l; ++i)
            CHECK(r.coords[static_cast<size_t>(i - 1)] == Rational(2 * (l - i) + 1, 2));
    }
}

TEST_CASE("rho with no odd roots is the ordinary half sum") {
    auto rs = RootSystem::make(RootSystemType::C, 2);
    WeightVector r = rho(rs);
    // C_2 positives: 2e1, 2e2, e1-e2, e1+e2 -> half sum = (2, 1).
    CHECK(r.coords[0] == Rational(2));
    CHECK(r.coords[1] == Rational(1));
}

TEST_CASE("pairing") {
    WeightVector u(2), v(2);
    u.coords = {Rational(1), Rational(0)};
    CHECK(weyl_pairing(u, u) == Rational(1));
    u.coords = {Rational(2), Rational(0)};
    CHECK(weyl_pairing(u, u) == Rational(4));

    auto rs = RootSystem::make(RootSystemType::B0, 3);
    WeightVector r = rho(rs);
    WeightVector lambda = r.scaled(Rational(-1));
    // (lambda, lambda + 2 rho) at lambda = -rho equals -(rho, rho).
    CHECK(weyl_pairing(lambda, lambda + r.scaled(Rational(2))) == -weyl_pairing(r, r));

    WeightVector bad(3);
    CHECK_THROWS_AS(weyl_pairing(u, bad), std::invalid_argument);
}

TEST_CASE("root heights in the super system") {
    auto rs = RootSystem::make(RootSystemType::B0, 3);
    RootVec e3(3, 0);
    e3[2] = 1;
    CHECK(root_height(rs, e3) == 1);
    RootVec e1(3, 0);
    e1[0] = 1;
    CHECK(root_height(rs, e1) == 3);  // e_1 = a_1 + a_2 + a_3
    RootVec ee(3, 0);
    ee[0] = 1;
    ee[1] = 1;  // e_1 + e_2 = (a_1+a_2+a_3) + (a_1+a_2)
    CHECK(root_height(rs, ee) == 5);
    RootVec neg(3, 0);
    neg[0] = -1;
    CHECK_THROWS_AS(root_height(rs, neg), std::invalid_argument);
}

TEST_CASE("root rendering") {
    CHECK(root_str({1, -1, 0}) == "e1-e2");
    CHECK(root_str({0, 0, 2}) == "2e3");
    CHECK(root_str({-1, -1, 0}) == "-e1-e2");
    CHECK(root_str({0, 0, 0}) == "0");
}
