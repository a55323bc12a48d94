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

#include "osptoda/scalar.hpp"

using namespace osptoda;

namespace {

std::mt19937 rng(20260811);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    return rat(num(rng), den(rng));
}

Scalar random_scalar() {
    return Scalar(random_rational(), random_rational(), random_rational(), random_rational());
}

}  // namespace

TEST_CASE("defining relation w^4 = -1") {
    CHECK(Scalar::omega(1) * Scalar::omega(3) == -Scalar::one());
    CHECK(Scalar::omega(4) == -Scalar::one());
    CHECK(Scalar::omega(8) == Scalar::one());
    CHECK(Scalar::omega(2) == Scalar::i());
}

TEST_CASE("i^(3/2) squared reduces to -i") {
    // w^3 * w^3 = w^6 = -w^2
    Scalar i32 = Scalar::omega(3);
    CHECK(i32 * i32 == -Scalar::i());
    CHECK(i32 * i32 == Scalar(Rational(0), Rational(0), Rational(-1), Rational(0)));
}

TEST_CASE("multiplicative identity") {
    for (int k = 0; k < 20; ++k) {
        Scalar x = random_scalar();
        CHECK(Scalar::one() * x == x);
    }
}

TEST_CASE("field inverse on random elements") {
    int found = 0;
    for (int k = 0; k < 1000; ++k) {
        Scalar a = random_scalar();
        if (a.is_zero()) continue;
        ++found;
        CHECK(a * a.inverse() == Scalar::one());
        CHECK(a.inverse() * a == Scalar::one());
    }
    CHECK(found > 900);
    CHECK_THROWS_AS(Scalar::zero().inverse(), std::domain_error);
}

TEST_CASE("conjugation is an involutive automorphism") {
    CHECK(Scalar::omega(1).conj() == -Scalar::omega(3));
    CHECK(Scalar::i().conj() == -Scalar::i());
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(), b = random_scalar();
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("conj(i^(3/2)) * i^(3/2) = 1") {
    Scalar i32 = Scalar::omega(3);
    CHECK(i32.conj() * i32 == Scalar::one());
}

TEST_CASE("string round-trip") {
    CHECK(Scalar::one().str() == "1 + 0*w + 0*w^2 + 0*w^3");
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar();
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK_THROWS_AS(Scalar::parse("1 + junk"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1 + 0*w + 0*w^2"), std::invalid_argument);
}

TEST_CASE("distributivity and associativity spot checks") {
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}
