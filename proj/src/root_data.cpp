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

#include "osptoda/root_data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace osptoda {

WeightVector WeightVector::operator+(const WeightVector& o) const {
    if (coords.size() != o.coords.size())
        throw std::invalid_argument("WeightVector: dimension mismatch");
    WeightVector r(l());
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] = coords[i] + o.coords[i];
    return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
    if (coords.size() != o.coords.size())
        throw std::invalid_argument("WeightVector: dimension mismatch");
    WeightVector r(l());
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] = coords[i] - o.coords[i];
    return r;
}

WeightVector WeightVector::scaled(const Rational& r) const {
    WeightVector out(l());
    for (size_t i = 0; i < coords.size(); ++i) out.coords[i] = coords[i] * r;
    return out;
}

Rational weyl_pairing(const WeightVector& u, const WeightVector& v) {
    if (u.coords.size() != v.coords.size())
        throw std::invalid_argument("weyl_pairing: dimension mismatch");
    Rational s(0);
    for (size_t i = 0; i < u.coords.size(); ++i) s += u.coords[i] * v.coords[i];
    return s;
}

Rational root_pairing(const RootVec& a, const RootVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("root_pairing: dimension mismatch");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return Rational(s);
}

Rational root_weight_pairing(const RootVec& a, const WeightVector& v) {
    if (static_cast<int>(a.size()) != v.l())
        throw std::invalid_argument("root_weight_pairing: dimension mismatch");
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * v.coords[i];
    return s;
}

WeightVector to_weight(const RootVec& a) {
    WeightVector w(static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i) w.coords[i] = Rational(a[i]);
    return w;
}

std::string root_str(const RootVec& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = a[i];
        if (c == 0) continue;
        if (c > 0 && !first) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c;
        os << "e" << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

RootVec root_negate(const RootVec& a) {
    RootVec r = a;
    for (auto& x : r) x = -x;
    return r;
}

RootVec root_add(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

namespace {

RootVec eps(int l, int i, int c = 1) {
    RootVec r(static_cast<size_t>(l), 0);
    r[static_cast<size_t>(i - 1)] = c;
    return r;
}

RootVec eps2(int l, int i, int ci, int j, int cj) {
    RootVec r(static_cast<size_t>(l), 0);
    r[static_cast<size_t>(i - 1)] = ci;
    r[static_cast<size_t>(j - 1)] = cj;
    return r;
}

// The chain part e_{l+1-k} - e_{l+2-k} for k = 2..l, closest to the short
// root first.
void push_chain(std::vector<SimpleRoot>& out, int l) {
    for (int k = 2; k <= l; ++k)
        out.push_back({eps2(l, l + 1 - k, 1, l + 2 - k, -1), 0});
}

}  // namespace

RootSystem RootSystem::make(RootSystemType type, int l) {
    if (l < 1) throw std::invalid_argument("RootSystem: l must be positive");
    RootSystem rs;
    rs.type = type;
    rs.l = l;

    switch (type) {
        case RootSystemType::B0:
            rs.simple.push_back({eps(l, l), 1});
            push_chain(rs.simple, l);
            for (int i = 1; i <= l; ++i) rs.positive_odd.push_back(eps(l, i));
            break;
        case RootSystemType::C:
            rs.simple.push_back({eps(l, l, 2), 0});
            push_chain(rs.simple, l);
            break;
        case RootSystemType::BC:
            rs.simple.push_back({eps(l, l), 0});
            rs.simple.push_back({eps(l, l, 2), 0});
            push_chain(rs.simple, l);
            for (int i = 1; i <= l; ++i) rs.positive_even.push_back(eps(l, i));
            break;
    }

    for (int i = 1; i <= l; ++i) rs.positive_even.push_back(eps(l, i, 2));
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            rs.positive_even.push_back(eps2(l, i, 1, j, -1));
            rs.positive_even.push_back(eps2(l, i, 1, j, 1));
        }
    return rs;
}

std::vector<RootVec> RootSystem::all_positive() const {
    std::vector<RootVec> r = positive_even;
    r.insert(r.end(), positive_odd.begin(), positive_odd.end());
    return r;
}

std::vector<std::vector<Rational>> cartan_matrix(const RootSystem& rs) {
    size_t n = rs.simple.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        Rational norm = root_pairing(rs.simple[i].vec, rs.simple[i].vec);
        if (norm == 0) throw std::invalid_argument("cartan_matrix: zero simple root");
        for (size_t j = 0; j < n; ++j)
            a[i][j] = Rational(2) * root_pairing(rs.simple[i].vec, rs.simple[j].vec) / norm;
    }
    return a;
}

Rational matrix_det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] * inv;
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

WeightVector rho(const RootSystem& rs) {
    WeightVector sum(rs.l);
    for (const auto& a : rs.positive_even)
        for (size_t i = 0; i < a.size(); ++i) sum.coords[i] += Rational(a[i]);
    for (const auto& b : rs.positive_odd)
        for (size_t i = 0; i < b.size(); ++i) sum.coords[i] -= Rational(b[i]);
    return sum.scaled(Rational(1, 2));
}

long root_height(const RootSystem& rs, const RootVec& root) {
    // Expansion basis: the l linearly independent simple roots (BC skips
    // the doubled root at position 1 of its simple order).
    std::vector<RootVec> basis;
    for (size_t k = 0; k < rs.simple.size(); ++k) {
        if (rs.type == RootSystemType::BC && k == 1) continue;
        basis.push_back(rs.simple[k].vec);
    }
    size_t n = basis.size();
    if (n != static_cast<size_t>(rs.l))
        throw std::logic_error("root_height: unexpected basis size");

    // Solve basis^T c = root by rational elimination.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) m[i][k] = Rational(basis[k][i]);
        m[i][n] = Rational(root[i]);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("root_height: singular simple-root basis");
        if (piv != col) std::swap(m[piv], m[col]);
        Rational inv = Rational(1) / m[col][col];
        for (size_t k = col; k <= n; ++k) m[col][k] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col];
            for (size_t k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    Rational height(0);
    for (size_t k = 0; k < n; ++k) {
        const Rational& c = m[k][n];
        if (c.get_den() != 1 || c < 0)
            throw std::invalid_argument("root_height: '" + root_str(root) +
                                        "' is not a nonnegative integer combination");
        height += c;
    }
    return height.get_num().get_si();
}

}  // namespace osptoda
