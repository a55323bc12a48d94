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

#include "osptoda/radial.hpp"

namespace osptoda {

std::string mu_symbol(int i) { return "mu" + std::to_string(i); }

GradedPoly contract_pair(const GradedPoly& left, const GradedPoly& right, int l) {
    // Pre-intern the symbol families so ids exist even for fresh tables.
    std::vector<int> id_m(static_cast<size_t>(l) + 1, -1), id_p(static_cast<size_t>(l) + 1, -1),
        id_g(static_cast<size_t>(l) + 1, -1);
    auto& tab = SymbolTable::instance();
    for (int k = 1; k <= l; ++k) {
        id_m[static_cast<size_t>(k)] = tab.intern(xi_symbol(Side::L, k), k == 1 ? 1 : 0);
        id_p[static_cast<size_t>(k)] = tab.intern(xi_symbol(Side::R, k), k == 1 ? 1 : 0);
        id_g[static_cast<size_t>(k)] = tab.intern(coupling_symbol(k), 0);
    }

    GradedPoly out;
    for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) {
            Monomial m = ml;
            for (const auto& [id, e] : mr.exps) {
                int v = (m.exps.count(id) ? m.exps[id] : 0) + e;
                if (v == 0)
                    m.exps.erase(id);
                else
                    m.exps[id] = v;
            }
            for (int k = 1; k <= l; ++k) {
                auto itm = m.exps.find(id_m[static_cast<size_t>(k)]);
                auto itp = m.exps.find(id_p[static_cast<size_t>(k)]);
                if (itm == m.exps.end() || itp == m.exps.end()) continue;
                int e = std::min(itm->second, itp->second);
                if (e <= 0) continue;
                itm->second -= e;
                itp->second -= e;
                if (itm->second == 0) m.exps.erase(itm);
                if (itp->second == 0) m.exps.erase(itp);
                m.exps[id_g[static_cast<size_t>(k)]] += e;
                if (m.exps[id_g[static_cast<size_t>(k)]] == 0)
                    m.exps.erase(id_g[static_cast<size_t>(k)]);
            }
            out.add_term(m, cl * cr);
        }
    return out;
}

RadialResult radial_part(const AlgebraTable& t, const UEAElement& c2_ordered,
                         const Character& chi_l, const Character& chi_r,
                         const WeightVector& rho_vec) {
    const int l = t.l;
    if (!is_normal_ordered(t, c2_ordered))
        throw UnorderedInput("radial_part: element is not in PBW form");
    if (chi_l.side != Side::L || chi_r.side != Side::R)
        throw std::invalid_argument("radial_part: character sides mixed up");

    DiffOperator d0(l);
    for (const auto& [w, coeff] : c2_ordered.terms) {
        bool pure_cartan = true;
        for (int g : w)
            if (t.at(g).kind != BasisKind::Cartan) pure_cartan = false;

        if (pure_cartan) {
            // h_i acting to the right of e^{-h_q} differentiates the torus
            // dependence with a minus sign per factor.
            std::vector<int> deriv(static_cast<size_t>(l), 0);
            for (int g : w) ++deriv[static_cast<size_t>(t.at(g).cartan_index - 1)];
            Scalar sign(w.size() % 2 ? -1 : 1);
            d0.add_term(OpKey{std::vector<int>(static_cast<size_t>(l), 0), deriv},
                        GradedPoly(coeff * sign));
            continue;
        }

        if (w.size() == 2 && t.at(w[0]).kind == BasisKind::NegRoot &&
            t.at(w[1]).kind == BasisKind::PosRoot &&
            t.at(w[0]).root == root_negate(t.at(w[1]).root)) {
            const RootVec& alpha = t.at(w[1]).root;
            GradedPoly vl = chi_l.value(w[0]);
            GradedPoly vr = chi_r.value(w[1]);
            if (vl.is_zero() || vr.is_zero()) continue;
            GradedPoly pot = contract_pair(vl.conj_coeffs(), vr, l).scaled(-coeff);
            d0.add_term(OpKey{alpha, std::vector<int>(static_cast<size_t>(l), 0)}, pot);
            continue;
        }

        throw UnsupportedTerm("radial_part: unsupported word shape in " +
                              UEAElement{{{w, coeff}}}.str(t));
    }

    DiffOperator d1 = conjugate_by_rho(d0, rho_vec);
    Rational rho_sq = weyl_pairing(rho_vec, rho_vec);

    // H = -d1 - (rho, rho); the conjugation's constant term cancels against
    // the shift, leaving a clean second-order operator.
    DiffOperator h = -d1;
    h.add_term(OpKey{std::vector<int>(static_cast<size_t>(l), 0),
                     std::vector<int>(static_cast<size_t>(l), 0)},
               GradedPoly(-rho_sq));

    // Every surviving coefficient must be a rational polynomial in the
    // couplings: all eighth-root phases cancel and no eigenvalue symbol may
    // leak through the contraction.
    std::vector<std::string> allowed;
    for (int k = 1; k <= l; ++k) allowed.push_back(coupling_symbol(k));
    if (!h.coefficients_rational_in(allowed))
        throw PhaseResidue("radial_part: non-real phase or stray symbol in " + h.str());

    GradedPoly eigen;
    for (int i = 1; i <= l; ++i) {
        GradedPoly li = GradedPoly::symbol(lambda_symbol(i), 0) +
                        GradedPoly(rho_vec[static_cast<size_t>(i - 1)]);
        eigen -= li * li;
    }
    return RadialResult{h, eigen};
}

GradedPoly eigenvalue_in_mu(const GradedPoly& eigen_lambda, const WeightVector& rho_vec) {
    std::map<std::string, GradedPoly> vals;
    for (int i = 1; i <= rho_vec.l(); ++i) {
        GradedPoly mi = GradedPoly::symbol(mu_symbol(i), 0);
        vals[lambda_symbol(i)] =
            mi.scaled(Scalar::i()) - GradedPoly(rho_vec[static_cast<size_t>(i - 1)]);
    }
    return eigen_lambda.subst(vals);
}

}  // namespace osptoda
