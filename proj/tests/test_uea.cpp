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

#include "osptoda/uea.hpp"

using namespace osptoda;

namespace {

std::mt19937 rng(20260811);

// The ordered form every closed-form Casimir must reach: sum_i (h_i^2 +
// 2 rho_i h_i + 2 X_{-e_i} X_{e_i}) + sum over even positive a of
// (a,a) X_{-a} X_a, with rho from the root data.
UEAElement ordered_expected(const AlgebraTable& t) {
    WeightVector r = rho(t.rs);
    UEAElement e;
    for (int i = 1; i <= t.l; ++i) {
        int h = t.index("h" + std::to_string(i));
        RootVec ei(static_cast<size_t>(t.l), 0);
        ei[static_cast<size_t>(i - 1)] = 1;
        int xp = t.root_index(ei), xm = t.root_index(root_negate(ei));
        e.add({h, h}, Scalar::one());
        e.add({h}, Scalar(Rational(2) * r[static_cast<size_t>(i - 1)]));
        e.add({xm, xp}, Scalar(Rational(2)));
    }
    for (const auto& alpha : t.rs.positive_even)
        e.add({t.root_index(root_negate(alpha)), t.root_index(alpha)},
              Scalar(root_pairing(alpha, alpha)));
    return e;
}

UEAElement random_element(const AlgebraTable& t, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(0, t.size() - 1), coeff(-2, 2);
    UEAElement e;
    for (int terms = 0; terms < 2; ++terms) {
        std::vector<int> w;
        int n = len(rng);
        for (int k = 0; k < n; ++k) w.push_back(gen(rng));
        e.add(w, Scalar(Rational(coeff(rng))));
    }
    return e;
}

size_t max_word_len(const UEAElement& e) {
    size_t m = 0;
    for (const auto& [w, c] : e.terms) {
        (void)c;
        m = std::max(m, w.size());
    }
    return m;
}

}  // namespace

TEST_CASE("odd-odd swap produces the super sign and the bracket") {
    auto t = AlgebraTable::build(1);
    int xp = t.index("X[e1]"), xm = t.index("X[-e1]"), h = t.index("h1");
    UEAElement e = UEAElement::word({xp, xm});
    UEAElement n = normal_order(t, e);
    UEAElement want;
    want.add({xm, xp}, -Scalar::one());
    want.add({h}, Scalar::one());
    CHECK(n == want);
}

TEST_CASE("ordered words are fixed points and ordering is idempotent") {
    auto t = AlgebraTable::build(2);
    UEAElement e = UEAElement::word({t.index("X[-e1]"), t.index("h1"), t.index("X[e2]")});
    CHECK(is_normal_ordered(t, e));
    CHECK(normal_order(t, e) == e);
    for (int trial = 0; trial < 30; ++trial) {
        UEAElement x = random_element(t, 3);
        UEAElement once = normal_order(t, x);
        CHECK(is_normal_ordered(t, once));
        CHECK(normal_order(t, once) == once);
    }
}

TEST_CASE("adjacent equal odd generators contract to the doubled root") {
    auto t = AlgebraTable::build(1);
    int xp = t.index("X[e1]");
    UEAElement sq = normal_order(t, UEAElement::word({xp, xp}));
    UEAElement want;
    want.add({t.index("X[2e1]")}, Scalar::one());
    CHECK(sq == want);
}

TEST_CASE("closed Casimir at rank 1 has the five expected words") {
    auto t = AlgebraTable::build(1);
    UEAElement c2 = casimir_closed(t);
    int h = t.index("h1"), xp = t.index("X[e1]"), xm = t.index("X[-e1]");
    int bp = t.index("X[2e1]"), bm = t.index("X[-2e1]");
    UEAElement want;
    want.add({h, h}, Scalar::one());
    want.add({xp, xm}, -Scalar::one());
    want.add({xm, xp}, Scalar::one());
    want.add({bp, bm}, Scalar(Rational(2)));
    want.add({bm, bp}, Scalar(Rational(2)));
    CHECK(c2 == want);
}

TEST_CASE("the three Casimir builds agree after ordering, l = 1..3") {
    for (int l = 1; l <= 3; ++l) {
        auto t = AlgebraTable::build(l);
        auto f = invariant_form(t);
        UEAElement closed = normal_order(t, casimir_closed(t));
        CHECK(normal_order(t, casimir_dual(t, f)) == closed);
        CHECK(normal_order(t, casimir_abc(t)) == closed);
    }
}

TEST_CASE("ordering the closed Casimir reproduces the rho-shifted form") {
    for (int l = 1; l <= 3; ++l) {
        auto t = AlgebraTable::build(l);
        CHECK(normal_order(t, casimir_closed(t)) == ordered_expected(t));
    }
}

TEST_CASE("Casimir is central, l = 1..2") {
    for (int l = 1; l <= 2; ++l) {
        auto t = AlgebraTable::build(l);
        auto rc = check_central(t, normal_order(t, casimir_closed(t)));
        INFO("first failure: ", rc.failures.empty() ? std::string() : rc.failures.front());
        CHECK(rc.pass());
    }
}

TEST_CASE("a non-central element is flagged") {
    auto t = AlgebraTable::build(1);
    auto rc = check_central(t, UEAElement::generator(t.index("h1")));
    CHECK(!rc.pass());
    // In particular [h_1, X_{e_1}] != 0.
    UEAElement h = UEAElement::generator(t.index("h1"));
    UEAElement x = UEAElement::generator(t.index("X[e1]"));
    CHECK(!normal_order(t, h * x - x * h).is_zero());
}

TEST_CASE("highest-weight value of the Casimir is (lam, lam + 2 rho)") {
    for (int l = 1; l <= 3; ++l) {
        auto t = AlgebraTable::build(l);
        GradedPoly val = hw_value_symbolic(t, normal_order(t, casimir_closed(t)));
        WeightVector r = rho(t.rs);
        GradedPoly want;
        for (int i = 1; i <= l; ++i) {
            GradedPoly li = GradedPoly::symbol(lambda_symbol(i), 0);
            want += li * li + li.scaled(Scalar(Rational(2) * r[static_cast<size_t>(i - 1)]));
        }
        CHECK(val == want);

        // lam = 0 -> 0 and lam = -rho -> -(rho, rho).
        WeightVector zero(l);
        CHECK(eval_at_weight(val, zero) == Rational(0));
        CHECK(eval_at_weight(val, r.scaled(Rational(-1))) == -weyl_pairing(r, r));
    }
}

TEST_CASE("hw evaluation requires ordered input") {
    auto t = AlgebraTable::build(1);
    UEAElement bad = UEAElement::word({t.index("X[e1]"), t.index("X[-e1]")});
    CHECK_THROWS_AS(hw_value_symbolic(t, bad), NotNormalOrdered);
}

TEST_CASE("unknown generator indices are rejected") {
    auto t = AlgebraTable::build(1);
    UEAElement bad = UEAElement::word({99});
    CHECK_THROWS_AS(normal_order(t, bad), UnknownLabel);
}

TEST_CASE("straightening is compatible with the product, l <= 2") {
    for (int l = 1; l <= 2; ++l) {
        auto t = AlgebraTable::build(l);
        for (int trial = 0; trial < 25; ++trial) {
            UEAElement a = random_element(t, 2), b = random_element(t, 2),
                       c = random_element(t, 2);
            CHECK(normal_order(t, (a * b) * c) == normal_order(t, a * (b * c)));
            CHECK(normal_order(t, normal_order(t, a * b) * c) ==
                  normal_order(t, a * normal_order(t, b * c)));
        }
    }
}

TEST_CASE("straightening never raises the degree") {
    auto t = AlgebraTable::build(2);
    for (int trial = 0; trial < 50; ++trial) {
        UEAElement e = random_element(t, 4);
        CHECK(max_word_len(normal_order(t, e)) <= max_word_len(e));
    }
}

TEST_CASE("tautological evaluation of the Casimir is 2l times the identity") {
    // Independent rank-1 oracle: assemble the matrix sum from raw
    // elementary matrices, never touching the basis table.
    {
        auto E = [](int i, int j) { return SuperMatrix::unit(1, i, j); };
        SuperMatrix h1 = E(1, 1) - E(2, 2);
        SuperMatrix xp = E(1, 0) + E(0, 2), xm = E(0, 1) - E(2, 0);
        SuperMatrix bp = E(1, 2), bm = E(2, 1);
        SuperMatrix c2 = h1 * h1 - xp * xm + xm * xp +
                         (bp * bm + bm * bp).scaled(Scalar(Rational(2)));
        CHECK(c2 == SuperMatrix::identity(1).scaled(Scalar(Rational(2))));
    }
    for (int l = 1; l <= 4; ++l) {
        auto t = AlgebraTable::build(l);
        Scalar c = tautological_casimir_scalar(t);
        CHECK(c == Scalar(Rational(2 * l)));

        // Cross-check: the highest weight of the defining representation is
        // e_1, verified by annihilation, and the Casimir value there agrees.
        for (int g = 0; g < t.size(); ++g) {
            const BasisElement& b = t.at(g);
            SuperMatrix image(t.l);
            for (int row = 0; row < image.n(); ++row) image.at(row, 1) = b.mat.at(row, 1);
            if (b.kind == BasisKind::PosRoot) CHECK(image.is_zero());
            if (b.kind == BasisKind::Cartan) {
                SuperMatrix want(t.l);
                if (b.cartan_index == 1) want.at(1, 1) = Scalar::one();
                CHECK(image == want);
            }
        }
        WeightVector e1(l);
        e1.coords[0] = Rational(1);
        GradedPoly hw = hw_value_symbolic(t, normal_order(t, casimir_closed(t)));
        CHECK(eval_at_weight(hw, e1) == Rational(2 * l));
    }
}

TEST_CASE("non-scalar evaluation is refused") {
    auto t = AlgebraTable::build(1);
    UEAElement h = UEAElement::generator(t.index("h1"));
    SuperMatrix m = eval_in_tautological(t, h);
    CHECK(m == t.at(t.index("h1")).mat);
    // tautological_casimir_scalar only accepts scalar results; feeding a
    // non-central element through the same assertion path must throw.
    CHECK_THROWS_AS(
        [&] {
            SuperMatrix mm = eval_in_tautological(t, h);
            Scalar c = mm.at(1, 1);
            if (mm != SuperMatrix::identity(1).scaled(c))
                throw NotScalarMatrix("not scalar");
            return c;
        }(),
        NotScalarMatrix);
}
