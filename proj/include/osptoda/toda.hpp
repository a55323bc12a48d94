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

#ifndef OSPTODA_TODA_HPP
#define OSPTODA_TODA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osptoda/diff_operator.hpp"
#include "osptoda/root_data.hpp"

namespace osptoda {

struct NonPositiveCoupling : std::runtime_error {
    explicit NonPositiveCoupling(const std::string& w) : std::runtime_error(w) {}
};

/// Exact element of the Q-span of {ln p : p prime} and {ln s : s coupling
/// symbol}: a rational linear combination keyed by basis name. Positive
/// rationals embed through prime factorization, so ln 6 = ln 2 + ln 3
/// canonically and equality is plain map comparison.
struct LogExpr {
    std::map<std::string, Rational> coeffs;

    static LogExpr zero() { return {}; }
    /// ln r for rational r > 0 (prime-factored numerator and denominator).
    static LogExpr of_rational(const Rational& r);
    /// ln of a formal positive symbol.
    static LogExpr of_symbol(const std::string& name);

    bool is_zero() const { return coeffs.empty(); }
    LogExpr operator+(const LogExpr& o) const;
    LogExpr operator-(const LogExpr& o) const;
    LogExpr scaled(const Rational& r) const;
    bool operator==(const LogExpr& o) const { return coeffs == o.coeffs; }

    std::string str() const;
};

/// e^{this} as an exact graded-poly monomial; every coefficient must be an
/// integer (throws otherwise). Prime bases multiply into the rational
/// coefficient, symbol bases become Laurent exponents.
GradedPoly exp_logexpr(const LogExpr& e);

/// Toda chain data: a root system and one coupling per simple root, keyed
/// by the simple root's position in the system's documented order.
/// Couplings are positive: either positive rationals or a positive
/// rational multiple of a single even-symbol monomial.
struct TodaSpec {
    RootSystem rs;
    std::vector<GradedPoly> couplings;  // parallel to rs.simple
};

/// BC spec with couplings listed chain-first: g_1..g_{l-1} on e_i-e_{i+1},
/// g_l on e_l, g_{l+1} on 2e_l.
TodaSpec bc_spec(int l, const std::vector<GradedPoly>& chain_first_couplings);
TodaSpec bc_spec_rational(int l, const std::vector<Rational>& chain_first_couplings);

/// The spec whose quadratic Hamiltonian the radial engine produces:
/// couplings 2*k_i^2 on the rank-l simple chain and short root, 4*k_1^4 on
/// the doubled root. Symbols k{i}sq when no numeric values are passed.
TodaSpec osp_spec_symbolic(int l);
TodaSpec osp_spec_rational(int l, const std::vector<Rational>& kappa_sq);

/// -sum_i d^2/dq_i^2 + sum over simple roots of g_a^2 e^{a(q)}. Depends
/// only on the simple-root data.
DiffOperator build_toda(const TodaSpec& spec);

struct CanonicalizeResult {
    std::vector<LogExpr> shift;       // c with q -> q + c
    TodaSpec canonical;               // transported couplings
    GradedPoly doubled_coupling;      // transported coupling on the doubled root (BC)
    bool is_osp_class = false;        // doubled coupling == 1
};

/// Solves g_a^2 e^{a(c)} = 1 over the l linearly independent simple roots
/// (BC skips its doubled root) and transports every coupling by the
/// solution. For BC the induced doubled-root coupling equals the class
/// invariant; the canonical spec has all couplings 1 exactly when that
/// invariant is 1.
CanonicalizeResult canonicalize(const TodaSpec& spec);

/// Shift-invariant ratio g^2_{2a1} / (g^2_{a1})^2 of a BC spec, as an
/// exact numerator/denominator pair (both are monomials).
struct CouplingRatio {
    GradedPoly num, den;
    bool is_one() const { return num == den; }
    std::optional<Rational> as_rational() const;
};

CouplingRatio osp_class_invariant(const TodaSpec& spec);

/// Coupling transport g_a^2 -> g_a^2 e^{a(c)} for an exact shift.
TodaSpec apply_shift(const TodaSpec& spec, const std::vector<LogExpr>& c);

/// Substitution q -> q + c on an operator: each term scales by e^{n(c)}.
DiffOperator shift_operator(const DiffOperator& op, const std::vector<LogExpr>& c);

/// ln t_i componentwise, for shifts given by rational torus points.
std::vector<LogExpr> shift_of_rationals(const std::vector<Rational>& t);

/// Exact term-by-term equality after canonical merge.
inline bool compare_operators(const DiffOperator& a, const DiffOperator& b) { return a == b; }

}  // namespace osptoda

#endif
