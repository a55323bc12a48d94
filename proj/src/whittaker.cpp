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

#include "osptoda/whittaker.hpp"

namespace osptoda {

std::string xi_symbol(Side side, int k) {
    return "xi" + std::to_string(k) + (side == Side::R ? "p" : "m");
}

std::string coupling_symbol(int k) { return "g" + std::to_string(k) + "sq"; }

Character make_character(Side side, const AlgebraTable& t) {
    Character chi;
    chi.side = side;
    chi.l = t.l;
    int l = t.l;
    int sgn = side == Side::R ? 1 : -1;

    auto root_of = [&](int idx, int coeff, int idx2 = 0, int coeff2 = 0) {
        RootVec r(static_cast<size_t>(l), 0);
        r[static_cast<size_t>(idx - 1)] = coeff * sgn;
        if (idx2) r[static_cast<size_t>(idx2 - 1)] = coeff2 * sgn;
        return r;
    };

    // Short simple root e_l: i^(3/2) * xi1 (odd value on the odd generator).
    GradedPoly xi1 = GradedPoly::symbol(xi_symbol(side, 1), 1);
    chi.values[t.root_index(root_of(l, 1))] = xi1.scaled(Scalar::omega(3));
    // Doubled root 2e_l: i * xi1^2 (even).
    chi.values[t.root_index(root_of(l, 2))] = (xi1 * xi1).scaled(Scalar::i());
    // Chain simple roots e_{l+1-k} - e_{l+2-k}, 1 < k <= l: i * xi_k (even).
    for (int k = 2; k <= l; ++k) {
        GradedPoly xik = GradedPoly::symbol(xi_symbol(side, k), 0);
        chi.values[t.root_index(root_of(l + 1 - k, 1, l + 2 - k, -1))] =
            xik.scaled(Scalar::i());
    }
    return chi;
}

RelationCheck check_character(const Character& chi, const AlgebraTable& t) {
    RelationCheck rc{chi.side == Side::R ? "whittaker-character-R" : "whittaker-character-L",
                     0,
                     {}};
    BasisKind kind = chi.side == Side::R ? BasisKind::PosRoot : BasisKind::NegRoot;

    // Values must live on generators of the right sign with matching parity.
    for (const auto& [idx, v] : chi.values) {
        ++rc.checked;
        if (t.at(idx).kind != kind) {
            rc.failures.push_back("value on wrong-sign generator " + t.at(idx).label);
            continue;
        }
        auto p = v.parity();
        if (!v.is_zero() && (!p || *p != t.at(idx).parity))
            rc.failures.push_back("value parity mismatch on " + t.at(idx).label);
    }

    for (int a = 0; a < t.size(); ++a) {
        if (t.at(a).kind != kind) continue;
        for (int b = 0; b < t.size(); ++b) {
            if (t.at(b).kind != kind) continue;
            ++rc.checked;
            GradedPoly lhs;
            for (const auto& [c, coef] : t.bracket(a, b)) lhs += chi.value(c).scaled(coef);

            int koszul = (t.at(a).parity && t.at(b).parity) ? -1 : 1;
            GradedPoly prod = chi.value(a) * chi.value(b);
            GradedPoly rhs;
            if (chi.side == Side::R)  // (-1)^{pq} chi_b chi_a - chi_a chi_b
                rhs = prod.scaled(Scalar(koszul)) - prod;
            else  // coefficients on the opposite flank: chi_b chi_a - (-1)^{pq} chi_a chi_b
                rhs = prod - prod.scaled(Scalar(koszul));

            if (lhs != rhs)
                rc.failures.push_back("pair (" + t.at(a).label + ", " + t.at(b).label +
                                      "): bracket value " + lhs.str() + " vs products " +
                                      rhs.str());
        }
    }
    return rc;
}

Character torus_rescale(const Character& chi, const AlgebraTable& t,
                        const std::vector<Rational>& torus) {
    if (static_cast<int>(torus.size()) != chi.l)
        throw std::invalid_argument("torus_rescale: rank mismatch");
    for (const auto& x : torus)
        if (x == 0) throw std::invalid_argument("torus_rescale: zero torus coordinate");
    Character out = chi;
    for (auto& [idx, v] : out.values) {
        const RootVec& gamma = t.at(idx).root;
        Rational f(1);
        for (size_t i = 0; i < gamma.size(); ++i)
            f *= rat_pow(torus[i], gamma[i]);
        v = v.scaled(Scalar(f));
    }
    return out;
}

}  // namespace osptoda
