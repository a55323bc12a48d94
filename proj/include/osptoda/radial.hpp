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

#ifndef OSPTODA_RADIAL_HPP
#define OSPTODA_RADIAL_HPP

#include "osptoda/diff_operator.hpp"
#include "osptoda/uea.hpp"
#include "osptoda/whittaker.hpp"

namespace osptoda {

struct PhaseResidue : std::runtime_error {
    explicit PhaseResidue(const std::string& w) : std::runtime_error(w) {}
};
struct UnorderedInput : std::runtime_error {
    explicit UnorderedInput(const std::string& w) : std::runtime_error(w) {}
};
struct UnsupportedTerm : std::runtime_error {
    explicit UnsupportedTerm(const std::string& w) : std::runtime_error(w) {}
};

struct RadialResult {
    DiffOperator hamiltonian;   // second-order operator with coupling-symbol coefficients
    GradedPoly eigenvalue;      // -(lam + rho, lam + rho) in the lam_i symbols
};

/// Turns the PBW-ordered quadratic central element into the radial
/// differential operator of the torus pairing, term by term:
///   * a Cartan factor h_i contributes -d/dq_i;
///   * a factor X_{-a} X_a contributes -conj(chi_L(X_{-a})) chi_R(X_a)
///     e^{a(q)}, the left value conjugated (antilinear slot) and products
///     of opposite eigenvalue symbols contracted into the even couplings
///     g_k^2 on the spot.
/// The result is conjugated by e^{rho(q)} and negated, so that the
/// returned operator H satisfies H Psi = -(lam + rho)^2 Psi. Throws
/// PhaseResidue if any root-of-unity phase or odd symbol survives in a
/// coefficient, UnorderedInput when the element is not in PBW form.
RadialResult radial_part(const AlgebraTable& t, const UEAElement& c2_ordered,
                         const Character& chi_l, const Character& chi_r,
                         const WeightVector& rho_vec);

/// Multiplies two character values placing the left factors to the left
/// and contracts xi{k}m^e xi{k}p^e -> (g_k^2)^e. Exposed for tests.
GradedPoly contract_pair(const GradedPoly& left, const GradedPoly& right, int l);

/// The eigenvalue polynomial under lam_i -> i mu_i - rho_i, expressed in
/// the even symbols mu1..mul (identically sum of mu_i^2).
GradedPoly eigenvalue_in_mu(const GradedPoly& eigen_lambda, const WeightVector& rho_vec);

std::string mu_symbol(int i);

}  // namespace osptoda

#endif
