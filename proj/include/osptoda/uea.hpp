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

#ifndef OSPTODA_UEA_HPP
#define OSPTODA_UEA_HPP

#include <map>
#include <string>
#include <vector>

#include "osptoda/algebra.hpp"
#include "osptoda/graded_poly.hpp"

namespace osptoda {

struct UnknownLabel : std::runtime_error {
    explicit UnknownLabel(const std::string& w) : std::runtime_error(w) {}
};
struct NotNormalOrdered : std::runtime_error {
    explicit NotNormalOrdered(const std::string& w) : std::runtime_error(w) {}
};
struct NotScalarMatrix : std::runtime_error {
    explicit NotScalarMatrix(const std::string& w) : std::runtime_error(w) {}
};

/// Element of the enveloping algebra: sum of coefficient * word, a word
/// being a list of basis indices of the underlying AlgebraTable. Canonical
/// (PBW) form has every word sorted by pbw_rank with no repeated adjacent
/// odd generator.
struct UEAElement {
    std::map<std::vector<int>, Scalar> terms;

    static UEAElement zero() { return {}; }
    static UEAElement constant(const Scalar& c);
    static UEAElement generator(int basis_index);
    static UEAElement word(std::initializer_list<int> w, const Scalar& c = Scalar::one());

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& w, const Scalar& c);

    UEAElement operator+(const UEAElement& o) const;
    UEAElement operator-(const UEAElement& o) const;
    UEAElement operator*(const UEAElement& o) const;  // concatenation product
    UEAElement scaled(const Scalar& c) const;
    bool operator==(const UEAElement& o) const { return terms == o.terms; }

    std::string str(const AlgebraTable& t) const;
};

/// Straightens an element to PBW canonical form using the super relation
/// xy = (-1)^{p(x)p(y)} yx + [x,y] on adjacent inversions and uu = [u,u]/2
/// on adjacent equal odd generators. Terminating: each swap lowers the
/// inversion count, bracket terms lower the degree.
UEAElement normal_order(const AlgebraTable& t, const UEAElement& e);

bool is_normal_ordered(const AlgebraTable& t, const UEAElement& e);

/// Quadratic Casimir from dual bases: sum_i u^i u_i over the Cartan block
/// plus sum over positive roots of (-1)^{p} X_a X^a + X^a X_a with duals
/// normalized by (X_a | X^a) = 1.
UEAElement casimir_dual(const AlgebraTable& t, const InvariantForm& f);

/// Closed form: sum_i (h_i^2 - X_{e_i} X_{-e_i} + X_{-e_i} X_{e_i}) +
/// sum over even positive a of ((a,a)/2)(X_a X_{-a} + X_{-a} X_a).
UEAElement casimir_closed(const AlgebraTable& t);

/// Same element in the matrix-block aliases: sum_i (a_ii^2 + x_i y_i -
/// y_i x_i + 2(c_ii b_ii + b_ii c_ii)) + sum_{i<j} (a_ij a_ji + a_ji a_ij
/// + b_ij c_ij + c_ij b_ij).
UEAElement casimir_abc(const AlgebraTable& t);

/// For every generator x: normal_order(e x - x e); failures list the
/// generators with nonzero remainder. (The element is even, so the plain
/// commutator is the super bracket.)
RelationCheck check_central(const AlgebraTable& t, const UEAElement& e);

/// Harish-Chandra style evaluation on a highest-weight line: requires e in
/// PBW form, drops every word containing a root generator, and evaluates
/// Cartan monomials at formal weight symbols lam1..laml. The result is a
/// polynomial with rational coefficients.
GradedPoly hw_value_symbolic(const AlgebraTable& t, const UEAElement& e);

/// Substitutes rational weight coordinates into a polynomial in the lam_i
/// symbols.
Rational eval_at_weight(const GradedPoly& p, const WeightVector& lambda);

/// Name of the i-th formal weight symbol (1-based).
std::string lambda_symbol(int i);

/// Evaluates e in the defining matrix realization.
SuperMatrix eval_in_tautological(const AlgebraTable& t, const UEAElement& e);

/// Evaluates the Casimir in the matrix realization, asserts the result is
/// c * Id and returns c (NotScalarMatrix otherwise).
Scalar tautological_casimir_scalar(const AlgebraTable& t);

}  // namespace osptoda

#endif
