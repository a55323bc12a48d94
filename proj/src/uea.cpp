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

#include "osptoda/uea.hpp"

#include <sstream>

namespace osptoda {

UEAElement UEAElement::constant(const Scalar& c) {
    UEAElement e;
    e.add({}, c);
    return e;
}

UEAElement UEAElement::generator(int basis_index) {
    UEAElement e;
    e.add({basis_index}, Scalar::one());
    return e;
}

UEAElement UEAElement::word(std::initializer_list<int> w, const Scalar& c) {
    UEAElement e;
    e.add(std::vector<int>(w), c);
    return e;
}

void UEAElement::add(const std::vector<int>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
    UEAElement r = *this;
    for (const auto& [w, c] : o.terms) r.add(w, c);
    return r;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
    UEAElement r = *this;
    for (const auto& [w, c] : o.terms) r.add(w, -c);
    return r;
}

UEAElement UEAElement::operator*(const UEAElement& o) const {
    UEAElement r;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : o.terms) {
            std::vector<int> w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    return r;
}

UEAElement UEAElement::scaled(const Scalar& c) const {
    UEAElement r;
    for (const auto& [w, x] : terms) r.add(w, x * c);
    return r;
}

std::string UEAElement::str(const AlgebraTable& t) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.str() << ")";
        for (int g : w) os << " " << t.at(g).label;
    }
    return os.str();
}

namespace {

// Position of the first adjacent violation of the PBW order, or -1.
int first_violation(const AlgebraTable& t, const std::vector<int>& w) {
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        int a = w[k], b = w[k + 1];
        if (a < 0 || a >= t.size() || b < 0 || b >= t.size())
            throw UnknownLabel("normal_order: basis index out of range");
        if (t.pbw_rank[static_cast<size_t>(a)] > t.pbw_rank[static_cast<size_t>(b)])
            return static_cast<int>(k);
        if (a == b && t.at(a).parity == 1) return static_cast<int>(k);
    }
    if (!w.empty() && (w.front() < 0 || w.front() >= t.size()))
        throw UnknownLabel("normal_order: basis index out of range");
    return -1;
}

struct Straightener {
    const AlgebraTable& t;
    std::map<std::vector<int>, UEAElement> memo;

    const UEAElement& normal_form(const std::vector<int>& w) {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;

        UEAElement res;
        int k = first_violation(t, w);
        if (k < 0) {
            res.add(w, Scalar::one());
        } else {
            int a = w[static_cast<size_t>(k)], b = w[static_cast<size_t>(k + 1)];
            auto splice = [&](int from_len, const Combo& combo, const Scalar& scale) {
                for (const auto& [g, c] : combo) {
                    std::vector<int> nw;
                    nw.reserve(w.size() - static_cast<size_t>(from_len) + 1);
                    nw.insert(nw.end(), w.begin(), w.begin() + k);
                    nw.push_back(g);
                    nw.insert(nw.end(), w.begin() + k + 2, w.end());
                    res = res + normal_form(nw).scaled(c * scale);
                }
            };
            if (a == b && t.at(a).parity == 1) {
                // uu = [u,u]/2
                splice(2, t.bracket(a, b), Scalar(Rational(1, 2)));
            } else {
                std::vector<int> sw = w;
                std::swap(sw[static_cast<size_t>(k)], sw[static_cast<size_t>(k + 1)]);
                Scalar sign((t.at(a).parity && t.at(b).parity) ? -1 : 1);
                res = res + normal_form(sw).scaled(sign);
                splice(2, t.bracket(a, b), Scalar::one());
            }
        }
        return memo.emplace(w, std::move(res)).first->second;
    }
};

}  // namespace

UEAElement normal_order(const AlgebraTable& t, const UEAElement& e) {
    Straightener s{t, {}};
    UEAElement out;
    for (const auto& [w, c] : e.terms) out = out + s.normal_form(w).scaled(c);
    return out;
}

bool is_normal_ordered(const AlgebraTable& t, const UEAElement& e) {
    for (const auto& [w, c] : e.terms) {
        (void)c;
        if (first_violation(t, w) >= 0) return false;
    }
    return true;
}

UEAElement casimir_dual(const AlgebraTable& t, const InvariantForm& f) {
    auto duals = dual_basis(f, t);
    auto dual_of = [&](int idx) {
        UEAElement e;
        for (const auto& [g, c] : duals[static_cast<size_t>(idx)]) e.add({g}, c);
        return e;
    };
    UEAElement c2;
    for (int i = 0; i < t.size(); ++i) {
        const BasisElement& b = t.at(i);
        if (b.kind == BasisKind::Cartan) {
            c2 = c2 + dual_of(i) * UEAElement::generator(i);
        } else if (b.kind == BasisKind::PosRoot) {
            UEAElement xa = UEAElement::generator(i);
            UEAElement dual = dual_of(i);
            Scalar sign(b.parity ? -1 : 1);
            c2 = c2 + (xa * dual).scaled(sign) + dual * xa;
        }
    }
    return c2;
}

UEAElement casimir_closed(const AlgebraTable& t) {
    UEAElement c2;
    int l = t.l;
    auto G = [&](int idx) { return UEAElement::generator(idx); };
    for (int i = 1; i <= l; ++i) {
        int h = t.index("h" + std::to_string(i));
        RootVec ei(static_cast<size_t>(l), 0);
        ei[static_cast<size_t>(i - 1)] = 1;
        int xp = t.root_index(ei);
        int xm = t.root_index(root_negate(ei));
        c2 = c2 + G(h) * G(h) - G(xp) * G(xm) + G(xm) * G(xp);
    }
    for (const auto& alpha : t.rs.positive_even) {
        int xp = t.root_index(alpha);
        int xm = t.root_index(root_negate(alpha));
        Scalar half_norm(root_pairing(alpha, alpha) / Rational(2));
        c2 = c2 + (G(xp) * G(xm) + G(xm) * G(xp)).scaled(half_norm);
    }
    return c2;
}

UEAElement casimir_abc(const AlgebraTable& t) {
    UEAElement c2;
    int l = t.l;
    auto root_gen = [&](int i, int ci, int j, int cj) {
        RootVec r(static_cast<size_t>(l), 0);
        r[static_cast<size_t>(i - 1)] += ci;
        if (j) r[static_cast<size_t>(j - 1)] += cj;
        return UEAElement::generator(t.root_index(r));
    };
    for (int i = 1; i <= l; ++i) {
        UEAElement aii = UEAElement::generator(t.index("h" + std::to_string(i)));
        UEAElement yi = root_gen(i, 1, 0, 0);    // X_{e_i}
        UEAElement xi = root_gen(i, -1, 0, 0);   // X_{-e_i}
        UEAElement bii = root_gen(i, 2, 0, 0);   // X_{2e_i}
        UEAElement cii = root_gen(i, -2, 0, 0);  // X_{-2e_i}
        c2 = c2 + aii * aii + xi * yi - yi * xi + (cii * bii + bii * cii).scaled(Scalar(2));
    }
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            UEAElement aij = root_gen(i, 1, j, -1);
            UEAElement aji = root_gen(i, -1, j, 1);
            UEAElement bij = root_gen(i, 1, j, 1);
            UEAElement cij = root_gen(i, -1, j, -1);
            c2 = c2 + aij * aji + aji * aij + bij * cij + cij * bij;
        }
    return c2;
}

RelationCheck check_central(const AlgebraTable& t, const UEAElement& e) {
    RelationCheck rc{"casimir-centrality", 0, {}};
    for (int g = 0; g < t.size(); ++g) {
        ++rc.checked;
        UEAElement x = UEAElement::generator(g);
        UEAElement comm = normal_order(t, e * x - x * e);
        if (!comm.is_zero())
            rc.failures.push_back("[C2, " + t.at(g).label + "] != 0: " + comm.str(t));
    }
    return rc;
}

std::string lambda_symbol(int i) { return "lam" + std::to_string(i); }

GradedPoly hw_value_symbolic(const AlgebraTable& t, const UEAElement& e) {
    if (!is_normal_ordered(t, e))
        throw NotNormalOrdered("hw_value_symbolic: input must be in PBW form");
    GradedPoly out;
    for (const auto& [w, c] : e.terms) {
        bool has_root = false;
        for (int g : w)
            if (t.at(g).kind != BasisKind::Cartan) {
                has_root = true;
                break;
            }
        if (has_root) continue;  // annihilates or moves off the weight line
        GradedPoly term{c};
        for (int g : w)
            term = term * GradedPoly::symbol(lambda_symbol(t.at(g).cartan_index), 0);
        out += term;
    }
    return out;
}

Rational eval_at_weight(const GradedPoly& p, const WeightVector& lambda) {
    std::map<std::string, GradedPoly> vals;
    for (int i = 1; i <= lambda.l(); ++i)
        vals[lambda_symbol(i)] = GradedPoly(lambda.coords[static_cast<size_t>(i - 1)]);
    GradedPoly r = p.subst(vals);
    if (!r.is_constant() || !r.constant_term().is_rational())
        throw std::domain_error("eval_at_weight: residual symbols after substitution");
    return r.constant_term().rational_part();
}

SuperMatrix eval_in_tautological(const AlgebraTable& t, const UEAElement& e) {
    SuperMatrix acc(t.l);
    for (const auto& [w, c] : e.terms) {
        SuperMatrix prod = SuperMatrix::identity(t.l);
        for (int g : w) prod = prod * t.at(g).mat;
        acc += prod.scaled(c);
    }
    return acc;
}

Scalar tautological_casimir_scalar(const AlgebraTable& t) {
    SuperMatrix m = eval_in_tautological(t, casimir_closed(t));
    Scalar c = m.at(1, 1);
    if (m != SuperMatrix::identity(t.l).scaled(c))
        throw NotScalarMatrix("tautological_casimir_scalar: C2 is not scalar");
    return c;
}

}  // namespace osptoda
