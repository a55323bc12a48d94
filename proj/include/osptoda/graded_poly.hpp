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

#ifndef OSPTODA_GRADED_POLY_HPP
#define OSPTODA_GRADED_POLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osptoda/scalar.hpp"

namespace osptoda {

/// Raised when a plain polynomial product would put two distinct odd
/// symbols into one monomial. The only supported mixing of opposite odd
/// symbols happens in the radial engine, which contracts them into even
/// coupling symbols on the spot (see radial.hpp).
struct MixedOddProduct : std::domain_error {
    explicit MixedOddProduct(const std::string& what) : std::domain_error(what) {}
};

/// Process-wide registry of formal symbols. A symbol is (name, parity);
/// ids are stable for a process lifetime and only names appear in any
/// serialized output.
class SymbolTable {
   public:
    static SymbolTable& instance();
    /// Returns the id, registering the symbol on first use. Re-registering
    /// with a different parity throws.
    int intern(const std::string& name, int parity);
    /// Lookup of an existing symbol; throws if unknown.
    int id(const std::string& name) const;
    const std::string& name(int id) const;
    int parity(int id) const;

   private:
    std::vector<std::pair<std::string, int>> symbols_;
    std::map<std::string, int> by_name_;
};

/// Laurent monomial: symbol id -> nonzero integer exponent.
struct Monomial {
    std::map<int, int> exps;

    /// Parity = (total degree in odd symbols) mod 2. Squares of odd
    /// symbols are even and are NOT rewritten to zero.
    int parity() const;
    bool operator<(const Monomial& o) const { return exps < o.exps; }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Polynomial in parity-tagged formal symbols over Scalar, with integer
/// (possibly negative) exponents. Distinct odd symbols never co-occur in a
/// monomial; the multiplication enforces this.
class GradedPoly {
   public:
    GradedPoly() = default;
    explicit GradedPoly(const Scalar& c) { add_term(Monomial{}, c); }
    explicit GradedPoly(const Rational& r) : GradedPoly(Scalar(r)) {}

    static GradedPoly zero() { return GradedPoly(); }
    static GradedPoly one() { return GradedPoly(Scalar::one()); }
    /// name^exp with the symbol's registered parity.
    static GradedPoly symbol(const std::string& name, int parity, int exp = 1);

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The coefficient of the empty monomial.
    Scalar constant_term() const;

    /// Parity if every monomial has the same one; nullopt when mixed or zero
    /// (zero is considered homogeneous of either parity by callers).
    std::optional<int> parity() const;

    void add_term(const Monomial& m, const Scalar& c);

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

    GradedPoly scaled(const Scalar& c) const;
    /// Applies Scalar::conj to every coefficient (the antilinear slot of the
    /// Whittaker pairing).
    GradedPoly conj_coeffs() const;

    /// Substitutes a symbol by a polynomial (exponent of the symbol must be
    /// nonnegative wherever it occurs). Unmapped symbols stay formal.
    GradedPoly subst(const std::map<std::string, GradedPoly>& values) const;

    /// True when every coefficient is rational and every monomial is a
    /// product of the given even symbols only.
    bool rational_in(const std::vector<std::string>& symbol_names) const;

    std::string str() const;

   private:
    std::map<Monomial, Scalar> terms_;
};

inline GradedPoly operator*(const Rational& r, const GradedPoly& p) {
    return p.scaled(Scalar(r));
}

}  // namespace osptoda

#endif
