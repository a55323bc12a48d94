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

#include <random>

#include "osptoda/graded_poly.hpp"

using namespace osptoda;

namespace {

std::mt19937 rng(20260811);

GradedPoly xi() { return GradedPoly::symbol("xi1p", 1); }
GradedPoly even(const std::string& n) { return GradedPoly::symbol(n, 0); }

// Random polynomial in one odd symbol and two even ones (distinct odd
// symbols may not meet in a product, so one odd family suffices here).
GradedPoly random_poly() {
    std::uniform_int_distribution<int> coin(0, 2), coeff(-2, 2);
    GradedPoly p;
    for (int t = 0; t < 3; ++t) {
        GradedPoly term{Scalar(Rational(coeff(rng)))};
        for (int e = 0; e < coin(rng); ++e) term = term * xi();
        for (int e = 0; e < coin(rng); ++e) term = term * even("u");
        for (int e = 0; e < coin(rng); ++e) term = term * even("v");
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("odd squares survive") {
    GradedPoly sq = xi() * xi();
    CHECK(!sq.is_zero());
    CHECK(sq.parity().value() == 0);
    CHECK(xi().parity().value() == 1);
}

TEST_CASE("even symbols commute with everything") {
    CHECK(even("g1sq") * even("g2sq") == even("g2sq") * even("g1sq"));
    CHECK(xi() * even("g1sq") == even("g1sq") * xi());
}

TEST_CASE("parity is additive in products") {
    for (int k = 0; k < 1000; ++k) {
        GradedPoly a = random_poly(), b = random_poly();
        auto pa = a.parity(), pb = b.parity();
        if (!pa || !pb) continue;  // mixed inputs have no homogeneous parity
        GradedPoly ab = a * b;
        auto pab = ab.parity();
        if (pab) CHECK(*pab == (*pa + *pb) % 2);
    }
}

TEST_CASE("multiplication is associative on random triples") {
    for (int k = 0; k < 1000; ++k) {
        GradedPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("distinct odd symbols are rejected in plain products") {
    GradedPoly other = GradedPoly::symbol("xi1m", 1);
    CHECK_THROWS_AS(xi() * other, MixedOddProduct);
}

TEST_CASE("odd times even times odd collapses to the same monomial") {
    GradedPoly p = xi() * even("u") * xi();
    GradedPoly q = (xi() * xi()) * even("u");
    CHECK(p == q);
}

TEST_CASE("substitution") {
    GradedPoly p = even("u") * even("u") + even("v").scaled(Scalar(Rational(3)));
    std::map<std::string, GradedPoly> vals{{"u", GradedPoly(Rational(2))},
                                           {"v", GradedPoly(Rational(-1))}};
    GradedPoly r = p.subst(vals);
    CHECK(r.is_constant());
    CHECK(r.constant_term().rational_part() == Rational(1));

    // Laurent exponents of substituted symbols are rejected, kept symbols
    // pass through.
    GradedPoly inv;
    Monomial m;
    m.exps[SymbolTable::instance().intern("u", 0)] = -1;
    inv.add_term(m, Scalar::one());
    CHECK_THROWS_AS(inv.subst(vals), std::domain_error);
    CHECK(inv.subst({{"v", GradedPoly::one()}}) == inv);
}

TEST_CASE("rational_in recognizes coupling polynomials") {
    GradedPoly ok = even("g1sq") * even("g1sq") + even("g2sq").scaled(Scalar(Rational(2)));
    CHECK(ok.rational_in({"g1sq", "g2sq"}));
    CHECK(!ok.rational_in({"g1sq"}));
    GradedPoly phase = even("g1sq").scaled(Scalar::i());
    CHECK(!phase.rational_in({"g1sq"}));
    CHECK(!xi().rational_in({"g1sq"}));
}

TEST_CASE("parity clash on re-registration") {
    GradedPoly::symbol("clash_sym", 0);
    CHECK_THROWS_AS(GradedPoly::symbol("clash_sym", 1), std::invalid_argument);
}
