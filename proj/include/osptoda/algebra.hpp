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

#ifndef OSPTODA_ALGEBRA_HPP
#define OSPTODA_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "osptoda/root_data.hpp"
#include "osptoda/scalar.hpp"
#include "osptoda/supermatrix.hpp"

namespace osptoda {

struct SpanViolation : std::runtime_error {
    explicit SpanViolation(const std::string& w) : std::runtime_error(w) {}
};

struct DegenerateForm : std::runtime_error {
    explicit DegenerateForm(const std::string& w) : std::runtime_error(w) {}
};

enum class BasisKind { Cartan, PosRoot, NegRoot };

struct BasisElement {
    std::string label;
    BasisKind kind;
    RootVec root;      // actual (signed) root; empty vector semantics for Cartan: all zero
    int parity;        // 1 odd, 0 even
    long height;       // height of |root|; 0 for Cartan
    int cartan_index;  // 1..l for Cartan, 0 otherwise
    SuperMatrix mat;
};

/// Linear combination of basis elements: (index, coefficient) pairs,
/// sorted by index.
using Combo = std::vector<std::pair<int, Scalar>>;

/// The Cartan-Weyl basis of the rank-l orthosymplectic superalgebra in its
/// tautological matrix realization, together with exact structure
/// constants extracted by expanding every super bracket back in the basis.
///
/// External basis order: h_1..h_l, then positive root vectors by (height,
/// lex), then negative root vectors mirroring the positive order. A second
/// total order (pbw_rank: negatives, Cartan, positives) fixes the normal
/// form in the enveloping algebra.
struct AlgebraTable {
    int l = 0;
    RootSystem rs;                         // the B0 root system
    std::vector<BasisElement> basis;
    std::map<std::string, int> by_label;
    std::map<RootVec, int> by_root;
    std::vector<int> pbw_rank;             // basis index -> PBW position
    std::vector<std::vector<Combo>> sc;    // sc[a][b] = expansion of [x_a, x_b]

    static AlgebraTable build(int l);

    int size() const { return static_cast<int>(basis.size()); }
    const BasisElement& at(int i) const { return basis[static_cast<size_t>(i)]; }
    int index(const std::string& label) const;
    /// Index of the generator attached to a (signed) root; throws if absent.
    int root_index(const RootVec& r) const;
    const Combo& bracket(int a, int b) const {
        return sc[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    /// Exact expansion of a matrix in the basis; SpanViolation if it is not
    /// in the span.
    Combo expand(const SuperMatrix& m, const std::string& context = "") const;

    /// Bracket of two linear combinations, expanded in the basis.
    Combo bracket_combo(const Combo& x, const Combo& y) const;
};

Combo combo_add(const Combo& a, const Combo& b);
Combo combo_scale(const Combo& a, const Scalar& c);
bool combo_is_zero(const Combo& a);

/// Symmetric invariant pairing table (X|Y) = (1/2) str(X Y) over the basis.
struct InvariantForm {
    std::vector<std::vector<Scalar>> gram;
};

InvariantForm invariant_form(const AlgebraTable& t);

/// dual[a] is the combination X^a with (X_a | X^a) = 1 and (X_b | X^a) = 0
/// for b != a (primal element in the first slot). DegenerateForm if the
/// Gram matrix is singular.
std::vector<Combo> dual_basis(const InvariantForm& f, const AlgebraTable& t);

struct RelationCheck {
    std::string family;
    long checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Runs every structural relation family against the stored structure
/// constants (closure recomputes matrix brackets and cross-checks the
/// table). Families: bracket-closure, cartan-weyl-relations,
/// symplectic-relations, serre-relations, serre-consequences,
/// root-ladder-relations. Failures are reported, never thrown.
std::vector<RelationCheck> verify_relations(const AlgebraTable& t);

/// Super Jacobi identity over all basis triples (cubic in basis size; run
/// for small l).
RelationCheck verify_super_jacobi(const AlgebraTable& t);

/// Invariant-form checks: the closed-form pairing table, evenness,
/// super-symmetry, invariance ([X,Y]|Z) = (X|[Y,Z]) over all basis
/// triples, and the dual-basis reconstruction identity.
std::vector<RelationCheck> verify_form(const AlgebraTable& t, const InvariantForm& f);

}  // namespace osptoda

#endif
