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

#include "osptoda/supermatrix.hpp"

namespace osptoda {

SuperMatrix SuperMatrix::unit(int l, int i, int j) {
    SuperMatrix m(l);
    m.at(i, j) = Scalar::one();
    return m;
}

SuperMatrix SuperMatrix::identity(int l) {
    SuperMatrix m(l);
    for (int i = 0; i < m.n(); ++i) m.at(i, i) = Scalar::one();
    return m;
}

SuperMatrix SuperMatrix::parity_op(int l) {
    SuperMatrix m = identity(l);
    m.at(0, 0) = -Scalar::one();
    return m;
}

bool SuperMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Parity SuperMatrix::parity() const {
    bool even_support = false, odd_support = false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (at(i, j).is_zero()) continue;
            if ((index_parity(i) + index_parity(j)) % 2 == 0)
                even_support = true;
            else
                odd_support = true;
        }
    if (even_support && odd_support) return Parity::Mixed;
    return odd_support ? Parity::Odd : Parity::Even;
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix r(l_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    if (l_ != o.l_) throw std::invalid_argument("SuperMatrix: size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    if (l_ != o.l_) throw std::invalid_argument("SuperMatrix: size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.l_ != b.l_) throw std::invalid_argument("SuperMatrix: size mismatch");
    SuperMatrix r(a.l_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

SuperMatrix SuperMatrix::scaled(const Scalar& c) const {
    SuperMatrix r(l_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
}

std::pair<SuperMatrix, SuperMatrix> SuperMatrix::split_by_parity() const {
    SuperMatrix even(l_), odd(l_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if ((index_parity(i) + index_parity(j)) % 2 == 0)
                even.at(i, j) = at(i, j);
            else
                odd.at(i, j) = at(i, j);
        }
    return {even, odd};
}

SuperMatrix super_bracket(const SuperMatrix& x, const SuperMatrix& y) {
    Parity px = x.parity(), py = y.parity();
    if (px == Parity::Mixed || py == Parity::Mixed)
        throw ParityError("super_bracket: inputs must be homogeneous (split first)");
    SuperMatrix xy = x * y;
    SuperMatrix yx = y * x;
    if (px == Parity::Odd && py == Parity::Odd) return xy + yx;
    return xy - yx;
}

Scalar supertrace(const SuperMatrix& a) {
    Scalar s = -a.at(0, 0);
    for (int k = 1; k < a.n(); ++k) s += a.at(k, k);
    return s;
}

SuperMatrix super_transpose(const SuperMatrix& a) {
    // Block rule on the (1|2l) split: top-left stays, bottom-left block of
    // the result is the transposed top-right, top-right picks a minus.
    SuperMatrix r(a.l());
    int n = a.n();
    r.at(0, 0) = a.at(0, 0);
    for (int k = 1; k < n; ++k) {
        r.at(0, k) = -a.at(k, 0);
        r.at(k, 0) = a.at(0, k);
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) r.at(i, j) = a.at(j, i);
    return r;
}

namespace {

// J = [[1,0,0],[0,0,-Id],[0,Id,0]] in the (1|l|l) block split.
SuperMatrix j_matrix(int l) {
    SuperMatrix j(l);
    j.at(0, 0) = Scalar::one();
    for (int i = 1; i <= l; ++i) {
        j.at(i, l + i) = -Scalar::one();
        j.at(l + i, i) = Scalar::one();
    }
    return j;
}

SuperMatrix j_inverse(int l) {
    SuperMatrix j(l);
    j.at(0, 0) = Scalar::one();
    for (int i = 1; i <= l; ++i) {
        j.at(i, l + i) = Scalar::one();
        j.at(l + i, i) = -Scalar::one();
    }
    return j;
}

}  // namespace

SuperMatrix theta(const SuperMatrix& a) {
    int l = a.l();
    return -(j_matrix(l) * super_transpose(a) * j_inverse(l));
}

bool is_osp(const SuperMatrix& a) {
    bool fixed = (theta(a) == a);

    // Independent block-shape test: writing the even sector in l|l blocks
    // [[A,B],[C,D]] and the odd row/columns as x (cols 1..l), y (cols
    // l+1..2l), the member shape is D = -A^t, B and C symmetric, first
    // column = (y^t, -x^t), corner zero.
    int l = a.l();
    bool shape = a.at(0, 0).is_zero();
    for (int i = 1; i <= l && shape; ++i) {
        if (a.at(i, 0) != a.at(0, l + i)) shape = false;           // y^t column
        if (a.at(l + i, 0) != -a.at(0, i)) shape = false;          // -x^t column
    }
    for (int i = 1; i <= l && shape; ++i)
        for (int j = 1; j <= l && shape; ++j) {
            if (a.at(l + i, l + j) != -a.at(j, i)) shape = false;  // D = -A^t
            if (a.at(i, l + j) != a.at(j, l + i)) shape = false;   // B symmetric
            if (a.at(l + i, j) != a.at(l + j, i)) shape = false;   // C symmetric
        }

    if (fixed != shape)
        throw std::logic_error("is_osp: fixed-point and block-shape tests disagree");
    return fixed;
}

}  // namespace osptoda
