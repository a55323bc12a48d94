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

#ifndef OSPTODA_WHITTAKER_HPP
#define OSPTODA_WHITTAKER_HPP

#include <map>
#include <string>
#include <vector>

#include "osptoda/algebra.hpp"
#include "osptoda/graded_poly.hpp"

namespace osptoda {

enum class Side { R, L };

/// One-dimensional character data on a maximal nilpotent subalgebra: side
/// R maps positive-root generators, side L negative-root generators, into
/// the graded symbol algebra. Values are parity-homogeneous of the
/// generator's parity; absent entries mean zero.
struct Character {
    Side side = Side::R;
    int l = 0;
    std::map<int, GradedPoly> values;  // basis index -> value

    GradedPoly value(int basis_index) const {
        auto it = values.find(basis_index);
        return it == values.end() ? GradedPoly::zero() : it->second;
    }
};

/// Name of the formal eigenvalue symbol attached to simple root number k
/// (1-based, k = 1 is the short root): "xi{k}p" on the R side, "xi{k}m" on
/// the L side. Odd for k = 1, even otherwise.
std::string xi_symbol(Side side, int k);

/// Name of the coupling symbol g_k^2 (even).
std::string coupling_symbol(int k);

/// The distinguished character: on side R the value is w^3 * xi1p on the
/// short simple root generator, w^2 * (xi1p)^2 on the doubled-root
/// generator, w^2 * xi{k}p on the chain simple roots, zero elsewhere; side
/// L mirrors this on the opposite nilpotent subalgebra.
Character make_character(Side side, const AlgebraTable& t);

/// Bracket-compatibility check over every same-sign generator pair (a, b):
/// the value of the expanded bracket must match the combination of
/// products dictated by the module convention of the side. On the R side
/// coefficients cross the module with the Koszul sign
/// (X(xi psi) = (-1)^{p(X)p(xi)} xi (X psi)); on the L side coefficients
/// are written on the opposite flank, which drops that sign. Violations
/// are reported with the offending pair.
RelationCheck check_character(const Character& chi, const AlgebraTable& t);

/// Adjoint rescaling by a torus point given in multiplicative coordinates
/// t_i > 0 (t_i plays e^{theta_i}): the value on the generator of signed
/// root gamma picks up the exact rational factor prod_i t_i^{gamma_i}.
/// t = (1,...,1) is the identity.
Character torus_rescale(const Character& chi, const AlgebraTable& t,
                        const std::vector<Rational>& torus);

}  // namespace osptoda

#endif
