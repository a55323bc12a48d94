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

#include "osptoda/toda.hpp"

using namespace osptoda;

namespace {

std::mt19937 rng(20260811);

Rational random_positive() {
    std::uniform_int_distribution<int> num(1, 12), den(1, 12);
    return rat(num(rng), den(rng));
}

DiffOperator laplacian(int l) {
    DiffOperator h(l);
    for (int i = 0; i < l; ++i) {
        std::vector<int> d(static_cast<size_t>(l), 0);
        d[static_cast<size_t>(i)] = 2;
        h.add_term(OpKey{std::vector<int>(static_cast<size_t>(l), 0), d}, Rational(-1));
    }
    return h;
}

}  // namespace

TEST_CASE("log expressions factor through primes") {
    LogExpr six = LogExpr::of_rational(Rational(6));
    LogExpr two = LogExpr::of_rational(Rational(2));
    LogExpr three = LogExpr::of_rational(Rational(3));
    CHECK(six == two + three);
    CHECK(LogExpr::of_rational(Rational(1)).is_zero());
    CHECK(LogExpr::of_rational(Rational(4, 9)) ==
          two.scaled(Rational(2)) - three.scaled(Rational(2)));
    CHECK_THROWS_AS(LogExpr::of_rational(Rational(-2)), NonPositiveCoupling);
    CHECK(exp_logexpr(six) == GradedPoly(Rational(6)));
    CHECK(exp_logexpr(six.scaled(Rational(-1))) == GradedPoly(Rational(1, 6)));
    CHECK_THROWS_AS(exp_logexpr(six.scaled(Rational(1, 2))), std::domain_error);
}

TEST_CASE("BC Hamiltonian has the chain, short, and doubled potentials") {
    // l = 2, couplings (g1, g2, g3) on e_1-e_2, e_2, 2e_2.
    TodaSpec spec = bc_spec_rational(2, {Rational(5), Rational(7), Rational(11)});
    DiffOperator h = build_toda(spec);
    DiffOperator want = laplacian(2);
    want.add_term(OpKey{{1, -1}, {0, 0}}, Rational(5));
    want.add_term(OpKey{{0, 1}, {0, 0}}, Rational(7));
    want.add_term(OpKey{{0, 2}, {0, 0}}, Rational(11));
    CHECK(h == want);
}

TEST_CASE("an empty simple set leaves the free Laplacian") {
    TodaSpec spec;
    spec.rs = RootSystem::make(RootSystemType::BC, 2);
    spec.rs.simple.clear();
    spec.couplings.clear();
    CHECK(build_toda(spec) == laplacian(2));
}

TEST_CASE("the Hamiltonian depends only on the simple roots") {
    TodaSpec a = bc_spec_rational(2, {Rational(1), Rational(1), Rational(1)});
    TodaSpec b = a;
    b.rs.positive_even.clear();  // positive lists are irrelevant
    CHECK(build_toda(a) == build_toda(b));
}

TEST_CASE("symbolic class couplings build the displayed Hamiltonian") {
    // Rank 1: -d^2 + 2 k_1^2 e^q + 4 k_1^4 e^{2q}.
    DiffOperator h = build_toda(osp_spec_symbolic(1));
    GradedPoly k1 = GradedPoly::symbol("k1sq", 0);
    DiffOperator want = laplacian(1);
    want.add_term(OpKey{{1}, {0}}, k1.scaled(Scalar(Rational(2))));
    want.add_term(OpKey{{2}, {0}}, (k1 * k1).scaled(Scalar(Rational(4))));
    CHECK(h == want);
}

TEST_CASE("canonicalization at rank 1 with kappa^2 = 3 shifts by -ln 6") {
    CanonicalizeResult res = canonicalize(osp_spec_rational(1, {Rational(3)}));
    REQUIRE(res.shift.size() == 1);
    CHECK(res.shift[0] == LogExpr::of_rational(Rational(6)).scaled(Rational(-1)));
    CHECK(res.is_osp_class);
    CHECK(res.doubled_coupling == GradedPoly::one());
    // 2*3 e^q + 4*9 e^{2q} becomes e^q + e^{2q} exactly.
    DiffOperator canon = build_toda(res.canonical);
    DiffOperator want = laplacian(1);
    want.add_term(OpKey{{1}, {0}}, Rational(1));
    want.add_term(OpKey{{2}, {0}}, Rational(1));
    CHECK(canon == want);
}

TEST_CASE("an already-canonical spec needs no shift") {
    TodaSpec spec = bc_spec_rational(1, {Rational(1), Rational(1)});
    CanonicalizeResult res = canonicalize(spec);
    CHECK(res.shift[0].is_zero());
    CHECK(res.is_osp_class);
}

TEST_CASE("symbolic class couplings canonicalize to the all-ones form, l = 1..4") {
    for (int l = 1; l <= 4; ++l) {
        CanonicalizeResult res = canonicalize(osp_spec_symbolic(l));
        CHECK(res.is_osp_class);
        std::vector<Rational> ones(static_cast<size_t>(l + 1), Rational(1));
        CHECK(build_toda(res.canonical) == build_toda(bc_spec_rational(l, ones)));
    }
}

TEST_CASE("non-positive couplings are rejected") {
    CHECK_THROWS_AS(canonicalize(bc_spec_rational(1, {Rational(-1), Rational(1)})),
                    NonPositiveCoupling);
    CHECK_THROWS_AS(canonicalize(bc_spec_rational(1, {Rational(0), Rational(1)})),
                    NonPositiveCoupling);
}

TEST_CASE("class invariant") {
    SUBCASE("class couplings give exactly 1 for every kappa") {
        for (int l = 1; l <= 3; ++l) CHECK(osp_class_invariant(osp_spec_symbolic(l)).is_one());
        CHECK(osp_class_invariant(osp_spec_rational(2, {Rational(7, 3), Rational(5)})).is_one());
    }
    SUBCASE("(2, 5) is outside the class") {
        TodaSpec spec = bc_spec_rational(1, {Rational(2), Rational(5)});
        CouplingRatio r = osp_class_invariant(spec);
        CHECK(!r.is_one());
        CHECK(r.as_rational().value() == Rational(5, 4));
    }
    SUBCASE("invariance under 100 random rational shifts") {
        TodaSpec spec = bc_spec_rational(2, {Rational(3), Rational(2), Rational(5)});
        Rational base = osp_class_invariant(spec).as_rational().value();
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> t{random_positive(), random_positive()};
            TodaSpec moved = apply_shift(spec, shift_of_rationals(t));
            CHECK(osp_class_invariant(moved).as_rational().value() == base);
        }
    }
}

TEST_CASE("canonicalize-then-build commutes with build-then-shift") {
    for (int trial = 0; trial < 25; ++trial) {
        int l = 1 + trial % 3;
        std::vector<Rational> g;
        for (int k = 0; k <= l; ++k) g.push_back(random_positive());
        TodaSpec spec = bc_spec_rational(l, g);
        CanonicalizeResult res = canonicalize(spec);
        CHECK(build_toda(res.canonical) == shift_operator(build_toda(spec), res.shift));
    }
}

TEST_CASE("the invariant is complete for shift equivalence with unit chains") {
    // Two specs with all chain couplings 1 are shift-equivalent iff the
    // invariant matches; canonical forms expose it.
    for (int trial = 0; trial < 30; ++trial) {
        Rational s1 = random_positive(), d1 = random_positive();
        Rational s2 = random_positive(), d2 = random_positive();
        TodaSpec a = bc_spec_rational(2, {Rational(1), s1, d1});
        TodaSpec b = bc_spec_rational(2, {Rational(1), s2, d2});
        bool same_invariant = osp_class_invariant(a).as_rational().value() ==
                              osp_class_invariant(b).as_rational().value();
        bool same_canonical =
            build_toda(canonicalize(a).canonical) == build_toda(canonicalize(b).canonical);
        CHECK(same_invariant == same_canonical);
    }
}

TEST_CASE("operators compare exactly") {
    DiffOperator a = build_toda(bc_spec_rational(1, {Rational(2), Rational(5)}));
    CHECK(compare_operators(a, a));
    DiffOperator b = build_toda(bc_spec_rational(1, {Rational(2), Rational(4)}));
    CHECK(!compare_operators(a, b));
    // A non-class spec never reaches a canonicalized class operator.
    CHECK(!compare_operators(build_toda(canonicalize(bc_spec_rational(1, {Rational(2), Rational(5)})).canonical),
                             build_toda(canonicalize(osp_spec_rational(1, {Rational(3)})).canonical)));
}
