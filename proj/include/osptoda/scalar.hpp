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

#ifndef OSPTODA_SCALAR_HPP
#define OSPTODA_SCALAR_HPP

#include <array>
#include <string>

#include "osptoda/rational.hpp"

namespace osptoda {

/// Element of the cyclotomic field Q(w) with w a primitive 8th root of
/// unity, i.e. Q[w]/(w^4 + 1). Stored as c0 + c1*w + c2*w^2 + c3*w^3 with
/// exact rational components. Note i = w^2 and i^(3/2) = w^3, so the
/// half-integral powers of i that appear in Whittaker character values are
/// honest field elements here and their cancellations are exact.
class Scalar {
   public:
    Scalar() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
    explicit Scalar(const Rational& r) : Scalar() { c_[0] = r; }
    explicit Scalar(long n) : Scalar(Rational(n)) {}
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    /// w^k for any integer k, reduced via w^4 = -1.
    static Scalar omega(long k);
    static Scalar i() { return omega(2); }

    const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const;  // no w, w^2, w^3 component
    /// The w^0 component; exact value when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    /// Field automorphism w -> w^{-1} = -w^3 (complex conjugation on the
    /// unit circle). Involutive; conj(i^(3/2)) * i^(3/2) = 1.
    Scalar conj() const;

    /// Canonical form "c0 + c1*w + c2*w^2 + c3*w^3", components as "p/q".
    std::string str() const;
    static Scalar parse(const std::string& s);

   private:
    std::array<Rational, 4> c_;
};

inline Scalar operator*(const Rational& r, Scalar s) { return Scalar(r) * s; }

}  // namespace osptoda

#endif
