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

#include "osptoda/algebra.hpp"

using namespace osptoda;

namespace {

bool all_pass(const std::vector<RelationCheck>& checks) {
    for (const auto& rc : checks) {
        INFO(rc.family, ": ", rc.failures.empty() ? "" : rc.failures.front());
        CHECK(rc.pass());
        if (!rc.pass()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("basis size and parities") {
    for (int l = 1; l <= 4; ++l) {
        auto t = AlgebraTable::build(l);
        CHECK(t.size() == 2 * l * l + 3 * l);
        int odd = 0;
        for (int i = 0; i < t.size(); ++i) {
            if (t.at(i).parity) ++odd;
            CHECK(is_osp(t.at(i).mat));
            CHECK(t.at(i).mat.parity() == (t.at(i).parity ? Parity::Odd : Parity::Even));
        }
        CHECK(odd == 2 * l);  // X_{e_i}, X_{-e_i}
    }
}

TEST_CASE("rank 1: the five generators") {
    auto t = AlgebraTable::build(1);
    CHECK(t.size() == 5);
    CHECK_NOTHROW(t.index("h1"));
    CHECK_NOTHROW(t.index("X[e1]"));
    CHECK_NOTHROW(t.index("X[-e1]"));
    CHECK_NOTHROW(t.index("X[2e1]"));
    CHECK_NOTHROW(t.index("X[-2e1]"));
    CHECK_THROWS_AS(t.index("X[e2]"), std::invalid_argument);
}

TEST_CASE("doubled-root generator is the single elementary matrix") {
    for (int l = 1; l <= 3; ++l) {
        auto t = AlgebraTable::build(l);
        for (int i = 1; i <= l; ++i) {
            RootVec r(static_cast<size_t>(l), 0);
            r[static_cast<size_t>(i - 1)] = 2;
            CHECK(t.at(t.root_index(r)).mat == SuperMatrix::unit(l, i, l + i));
            CHECK(t.at(t.root_index(r)).parity == 0);
            r[static_cast<size_t>(i - 1)] = 1;
            CHECK(t.at(t.root_index(r)).parity == 1);
        }
    }
}

TEST_CASE("spot structure constants") {
    auto t = AlgebraTable::build(2);
    auto X = [&](const std::string& s) { return t.index(s); };

    // [X_{e_1}, X_{-e_1}] = h_1
    const Combo& c1 = t.bracket(X("X[e1]"), X("X[-e1]"));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].first == X("h1"));
    CHECK(c1[0].second == Scalar::one());

    // [h_1, X_{2e_1}] = 2 X_{2e_1}
    const Combo& c2 = t.bracket(X("h1"), X("X[2e1]"));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].first == X("X[2e1]"));
    CHECK(c2[0].second == Scalar(Rational(2)));
}

TEST_CASE("generic b/c bracket lands on a single a-generator") {
    // [X_{e_1+e_2}, X_{-e_2-e_3}] = X_{e_1-e_3} at l = 3.
    auto t = AlgebraTable::build(3);
    const Combo& c = t.bracket(t.index("X[e1+e2]"), t.index("X[-e2-e3]"));
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == t.index("X[e1-e3]"));
    CHECK(c[0].second == Scalar::one());
}

TEST_CASE("expansion rejects matrices outside the span") {
    auto t = AlgebraTable::build(1);
    CHECK_THROWS_AS(t.expand(SuperMatrix::unit(1, 1, 1)), SpanViolation);
    CHECK_NOTHROW(t.expand(SuperMatrix::unit(1, 1, 1) - SuperMatrix::unit(1, 2, 2)));
}

TEST_CASE("relation suites pass for l = 1..3") {
    for (int l = 1; l <= 3; ++l) {
        auto t = AlgebraTable::build(l);
        CHECK(all_pass(verify_relations(t)));
    }
}

TEST_CASE("super Jacobi over all basis triples, l <= 2") {
    for (int l = 1; l <= 2; ++l) {
        auto rc = verify_super_jacobi(AlgebraTable::build(l));
        CHECK(rc.pass());
        CHECK(rc.checked == static_cast<long>(rc.checked));
    }
}

TEST_CASE("a flipped structure constant is detected") {
    auto t = AlgebraTable::build(2);
    int a = t.index("X[e1]"), b = t.index("X[-e1]");
    REQUIRE(!t.sc[static_cast<size_t>(a)][static_cast<size_t>(b)].empty());
    t.sc[static_cast<size_t>(a)][static_cast<size_t>(b)][0].second =
        -t.sc[static_cast<size_t>(a)][static_cast<size_t>(b)][0].second;
    bool any_failure = false;
    for (const auto& rc : verify_relations(t))
        if (!rc.pass()) any_failure = true;
    CHECK(any_failure);
}

TEST_CASE("invariant form closed values") {
    for (int l = 1; l <= 3; ++l) {
        auto t = AlgebraTable::build(l);
        auto f = invariant_form(t);
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j) {
                Scalar g = f.gram[static_cast<size_t>(t.index("h" + std::to_string(i)))]
                                 [static_cast<size_t>(t.index("h" + std::to_string(j)))];
                CHECK(g == (i == j ? Scalar::one() : Scalar::zero()));
            }
        // (X_{e_i} | X_{-e_j}) = delta_ij
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j) {
                RootVec ri(static_cast<size_t>(l), 0), rj(static_cast<size_t>(l), 0);
                ri[static_cast<size_t>(i - 1)] = 1;
                rj[static_cast<size_t>(j - 1)] = -1;
                Scalar g = f.gram[static_cast<size_t>(t.root_index(ri))]
                                 [static_cast<size_t>(t.root_index(rj))];
                CHECK(g == (i == j ? Scalar::one() : Scalar::zero()));
            }
        // (X_{2e_i} | X_{-2e_i}) = 1/2
        for (int i = 1; i <= l; ++i) {
            RootVec r(static_cast<size_t>(l), 0);
            r[static_cast<size_t>(i - 1)] = 2;
            Scalar g = f.gram[static_cast<size_t>(t.root_index(r))]
                             [static_cast<size_t>(t.root_index(root_negate(r)))];
            CHECK(g == Scalar(Rational(1, 2)));
        }
    }
}

TEST_CASE("form suites: table, invariance, duals for l = 1..2") {
    for (int l = 1; l <= 2; ++l) {
        auto t = AlgebraTable::build(l);
        auto f = invariant_form(t);
        CHECK(all_pass(verify_form(t, f)));
    }
}

TEST_CASE("degenerate Gram matrix is refused") {
    auto t = AlgebraTable::build(1);
    InvariantForm f;
    f.gram.assign(static_cast<size_t>(t.size()),
                  std::vector<Scalar>(static_cast<size_t>(t.size()), Scalar::zero()));
    CHECK_THROWS_AS(dual_basis(f, t), DegenerateForm);
}

TEST_CASE("pbw order: negatives, Cartan, positives") {
    auto t = AlgebraTable::build(2);
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            if (t.at(i).kind == BasisKind::NegRoot && t.at(j).kind != BasisKind::NegRoot)
                CHECK(t.pbw_rank[static_cast<size_t>(i)] < t.pbw_rank[static_cast<size_t>(j)]);
            if (t.at(i).kind == BasisKind::Cartan && t.at(j).kind == BasisKind::PosRoot)
                CHECK(t.pbw_rank[static_cast<size_t>(i)] < t.pbw_rank[static_cast<size_t>(j)]);
        }
}
