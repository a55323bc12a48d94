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

#include "osptoda/algebra.hpp"

#include <algorithm>
#include <tuple>

namespace osptoda {

namespace {

struct PrimaryEntry {
    int row, col;
};

// Every basis element has a unit coefficient at a position no other basis
// element's matrix touches as its own primary; expansion reads these
// positions directly.
PrimaryEntry primary_entry(const BasisElement& b, int l) {
    if (b.kind == BasisKind::Cartan) return {b.cartan_index, b.cartan_index};
    const RootVec& r = b.root;
    int pos = 0, neg = 0, ip = 0, in = 0;
    for (int k = 0; k < static_cast<int>(r.size()); ++k) {
        if (r[static_cast<size_t>(k)] > 0) {
            ++pos;
            ip = k + 1;
            if (r[static_cast<size_t>(k)] == 2) ++pos;
        }
        if (r[static_cast<size_t>(k)] < 0) {
            ++neg;
            in = k + 1;
            if (r[static_cast<size_t>(k)] == -2) ++neg;
        }
    }
    if (pos == 1 && neg == 0) return {ip, 0};              // e_i
    if (pos == 0 && neg == 1) return {0, in};              // -e_i
    if (pos == 2 && neg == 0) {
        // e_i + e_j (i<j) at (i, l+j); 2e_i at (i, l+i)
        int i = 0, j = 0;
        for (int k = 0; k < static_cast<int>(r.size()); ++k)
            if (r[static_cast<size_t>(k)] > 0) {
                if (!i)
                    i = k + 1;
                else
                    j = k + 1;
                if (r[static_cast<size_t>(k)] == 2) j = k + 1;
            }
        return {i, l + j};
    }
    if (pos == 0 && neg == 2) {
        int i = 0, j = 0;
        for (int k = 0; k < static_cast<int>(r.size()); ++k)
            if (r[static_cast<size_t>(k)] < 0) {
                if (!i)
                    i = k + 1;
                else
                    j = k + 1;
                if (r[static_cast<size_t>(k)] == -2) j = k + 1;
            }
        return {l + j, i};
    }
    return {ip, in};  // e_i - e_j at (i, j)
}

SuperMatrix realize(int l, const RootVec& r, BasisKind kind, int cartan_index) {
    using SM = SuperMatrix;
    if (kind == BasisKind::Cartan) {
        SM m(l);
        m.at(cartan_index, cartan_index) = Scalar::one();
        m.at(l + cartan_index, l + cartan_index) = -Scalar::one();
        return m;
    }
    int pos_count = 0, neg_count = 0;
    std::vector<int> ppos, npos;
    for (int k = 0; k < l; ++k) {
        int c = r[static_cast<size_t>(k)];
        if (c > 0) {
            pos_count += c;
            for (int t = 0; t < c; ++t) ppos.push_back(k + 1);
        } else if (c < 0) {
            neg_count += -c;
            for (int t = 0; t < -c; ++t) npos.push_back(k + 1);
        }
    }
    SM m(l);
    if (pos_count == 1 && neg_count == 0) {
        int i = ppos[0];
        m.at(i, 0) = Scalar::one();
        m.at(0, l + i) = Scalar::one();
    } else if (pos_count == 0 && neg_count == 1) {
        int i = npos[0];
        m.at(0, i) = Scalar::one();
        m.at(l + i, 0) = -Scalar::one();
    } else if (pos_count == 2 && neg_count == 0) {
        int i = ppos[0], j = ppos[1];
        if (i == j) {
            m.at(i, l + i) = Scalar::one();
        } else {
            m.at(i, l + j) = Scalar::one();
            m.at(j, l + i) = Scalar::one();
        }
    } else if (pos_count == 0 && neg_count == 2) {
        int i = npos[0], j = npos[1];
        if (i == j) {
            m.at(l + i, i) = Scalar::one();
        } else {
            m.at(l + j, i) = Scalar::one();
            m.at(l + i, j) = Scalar::one();
        }
    } else {
        // e_i - e_j, i != j
        int i = ppos[0], j = npos[0];
        m.at(i, j) = Scalar::one();
        m.at(l + j, l + i) = -Scalar::one();
    }
    return m;
}

}  // namespace

AlgebraTable AlgebraTable::build(int l) {
    AlgebraTable t;
    t.l = l;
    t.rs = RootSystem::make(RootSystemType::B0, l);

    // Positive roots sorted by (height, lex).
    std::vector<std::pair<RootVec, int>> pos;  // (root, parity)
    for (const auto& r : t.rs.positive_even) pos.emplace_back(r, 0);
    for (const auto& r : t.rs.positive_odd) pos.emplace_back(r, 1);
    std::stable_sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
        long ha = root_height(t.rs, a.first), hb = root_height(t.rs, b.first);
        return std::tie(ha, a.first) < std::tie(hb, b.first);
    });

    auto push = [&](BasisKind kind, const RootVec& root, int parity, int cartan_index) {
        BasisElement b{kind == BasisKind::Cartan ? "h" + std::to_string(cartan_index)
                                                 : "X[" + root_str(root) + "]",
                       kind,
                       root,
                       parity,
                       kind == BasisKind::Cartan
                           ? 0
                           : root_height(t.rs, kind == BasisKind::NegRoot ? root_negate(root)
                                                                          : root),
                       cartan_index,
                       realize(l, root, kind, cartan_index)};
        int idx = static_cast<int>(t.basis.size());
        t.by_label[b.label] = idx;
        if (kind != BasisKind::Cartan) t.by_root[root] = idx;
        t.basis.push_back(std::move(b));
    };

    RootVec zero(static_cast<size_t>(l), 0);
    for (int i = 1; i <= l; ++i) push(BasisKind::Cartan, zero, 0, i);
    for (const auto& [r, p] : pos) push(BasisKind::PosRoot, r, p, 0);
    for (const auto& [r, p] : pos) push(BasisKind::NegRoot, root_negate(r), p, 0);

    // PBW order: negatives (reverse of the mirrored positive order, so
    // height descending), Cartan h_1..h_l, positives (height ascending, lex).
    int n = t.size();
    std::vector<int> order;
    for (int i = n - 1; i >= l * l + 2 * l; --i) order.push_back(i);  // negatives reversed
    for (int i = 0; i < l; ++i) order.push_back(i);
    for (int i = l; i < l + l * l + l; ++i) order.push_back(i);
    t.pbw_rank.assign(static_cast<size_t>(n), 0);
    for (int rank = 0; rank < n; ++rank) t.pbw_rank[static_cast<size_t>(order[static_cast<size_t>(rank)])] = rank;

    // Structure constants by exact expansion of every super bracket.
    t.sc.assign(static_cast<size_t>(n), std::vector<Combo>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SuperMatrix br = super_bracket(t.at(a).mat, t.at(b).mat);
            t.sc[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                t.expand(br, "[" + t.at(a).label + ", " + t.at(b).label + "]");
        }
    return t;
}

int AlgebraTable::index(const std::string& label) const {
    auto it = by_label.find(label);
    if (it == by_label.end()) throw std::invalid_argument("AlgebraTable: unknown label " + label);
    return it->second;
}

int AlgebraTable::root_index(const RootVec& r) const {
    auto it = by_root.find(r);
    if (it == by_root.end())
        throw std::invalid_argument("AlgebraTable: no generator for root " + root_str(r));
    return it->second;
}

Combo AlgebraTable::expand(const SuperMatrix& m, const std::string& context) const {
    SuperMatrix rest = m;
    Combo out;
    for (int idx = 0; idx < size(); ++idx) {
        const BasisElement& b = at(idx);
        PrimaryEntry pe = primary_entry(b, l);
        Scalar c = rest.at(pe.row, pe.col);
        if (c.is_zero()) continue;
        rest -= b.mat.scaled(c);
        out.emplace_back(idx, c);
    }
    if (!rest.is_zero())
        throw SpanViolation("expand: matrix not in basis span" +
                            (context.empty() ? "" : " at " + context));
    return out;
}

Combo combo_add(const Combo& a, const Combo& b) {
    std::map<int, Scalar> acc;
    for (const auto& [i, c] : a) acc[i] += c;
    for (const auto& [i, c] : b) acc[i] += c;
    Combo out;
    for (const auto& [i, c] : acc)
        if (!c.is_zero()) out.emplace_back(i, c);
    return out;
}

Combo combo_scale(const Combo& a, const Scalar& c) {
    Combo out;
    if (c.is_zero()) return out;
    for (const auto& [i, x] : a) out.emplace_back(i, x * c);
    return out;
}

bool combo_is_zero(const Combo& a) {
    for (const auto& [i, c] : a) {
        (void)i;
        if (!c.is_zero()) return false;
    }
    return true;
}

Combo AlgebraTable::bracket_combo(const Combo& x, const Combo& y) const {
    Combo out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out = combo_add(out, combo_scale(bracket(a, b), ca * cb));
    return out;
}

InvariantForm invariant_form(const AlgebraTable& t) {
    int n = t.size();
    InvariantForm f;
    f.gram.assign(static_cast<size_t>(n),
                  std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero()));
    Scalar half(Rational(1, 2));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            f.gram[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                supertrace(t.at(a).mat * t.at(b).mat) * half;
    return f;
}

std::vector<Combo> dual_basis(const InvariantForm& f, const AlgebraTable& t) {
    // Solve G d_c = e_c for every c: d_c are the coefficients of X^c with
    // (X_a | X^c) = delta_ac.
    int n = t.size();
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(n),
                                       std::vector<Scalar>(static_cast<size_t>(2 * n), Scalar::zero()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                f.gram[static_cast<size_t>(i)][static_cast<size_t>(j)];
        m[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = Scalar::one();
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!m[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) throw DegenerateForm("dual_basis: singular Gram matrix");
        if (piv != col) std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
        Scalar inv = m[static_cast<size_t>(col)][static_cast<size_t>(col)].inverse();
        for (int k = col; k < 2 * n; ++k)
            m[static_cast<size_t>(col)][static_cast<size_t>(k)] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            Scalar fkt = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (fkt.is_zero()) continue;
            for (int k = col; k < 2 * n; ++k)
                m[static_cast<size_t>(row)][static_cast<size_t>(k)] -=
                    fkt * m[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
    }
    std::vector<Combo> duals(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        Combo d;
        for (int b = 0; b < n; ++b) {
            const Scalar& x = m[static_cast<size_t>(b)][static_cast<size_t>(n + c)];
            if (!x.is_zero()) d.emplace_back(b, x);
        }
        duals[static_cast<size_t>(c)] = d;
    }
    return duals;
}

}  // namespace osptoda
