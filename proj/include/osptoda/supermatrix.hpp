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

#ifndef OSPTODA_SUPERMATRIX_HPP
#define OSPTODA_SUPERMATRIX_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "osptoda/scalar.hpp"

namespace osptoda {

enum class Parity { Even = 0, Odd = 1, Mixed = 2 };

struct ParityError : std::domain_error {
    explicit ParityError(const std::string& w) : std::domain_error(w) {}
};

/// Dense (1+2l) x (1+2l) matrix over Scalar acting on the superspace with
/// basis index 0 odd and indices 1..2l even. Even matrices are block
/// diagonal in that split, odd matrices block off-diagonal; general
/// matrices are allowed as containers.
class SuperMatrix {
   public:
    explicit SuperMatrix(int l)
        : l_(l), n_(2 * l + 1), a_(static_cast<size_t>(n_ * n_), Scalar::zero()) {
        if (l < 1) throw std::invalid_argument("SuperMatrix: l must be positive");
    }

    /// Elementary matrix E_{ij} (single 1 at row i, column j).
    static SuperMatrix unit(int l, int i, int j);
    static SuperMatrix identity(int l);
    /// The parity operator diag(-1, Id_{2l}).
    static SuperMatrix parity_op(int l);

    int l() const { return l_; }
    int n() const { return n_; }
    /// Parity of basis index: 1 for 0, 0 for 1..2l.
    static int index_parity(int i) { return i == 0 ? 1 : 0; }

    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i * n_ + j)]; }
    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i * n_ + j)]; }

    bool is_zero() const;
    /// Declared-by-shape parity: Even / Odd when the support respects the
    /// block split, Mixed otherwise. The zero matrix reads Even.
    Parity parity() const;
    bool is_homogeneous() const { return parity() != Parity::Mixed; }

    SuperMatrix operator-() const;
    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.l_ == b.l_ && a.a_ == b.a_;
    }
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

    SuperMatrix scaled(const Scalar& c) const;
    /// (even part, odd part); the sum is the original matrix.
    std::pair<SuperMatrix, SuperMatrix> split_by_parity() const;

    friend SuperMatrix super_bracket(const SuperMatrix& x, const SuperMatrix& y);
    friend Scalar supertrace(const SuperMatrix& a);
    friend SuperMatrix super_transpose(const SuperMatrix& a);
    /// theta(X) = -J X^T J^{-1} with the symplectic-style J on the even
    /// block; an involution, defined blockwise for any matrix.
    friend SuperMatrix theta(const SuperMatrix& a);

   private:
    int l_;
    int n_;
    std::vector<Scalar> a_;
};

SuperMatrix super_bracket(const SuperMatrix& x, const SuperMatrix& y);
Scalar supertrace(const SuperMatrix& a);
SuperMatrix super_transpose(const SuperMatrix& a);
SuperMatrix theta(const SuperMatrix& a);

/// Fixed-point test X^theta = X, cross-checked against the explicit block
/// shape (top-left zero, symplectic even block, tied odd blocks). The two
/// tests must agree; disagreement throws.
bool is_osp(const SuperMatrix& a);

}  // namespace osptoda

#endif
