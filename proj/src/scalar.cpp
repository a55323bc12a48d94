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

#include "osptoda/scalar.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>

namespace osptoda {

Scalar Scalar::omega(long k) {
    long r = ((k % 8) + 8) % 8;
    Scalar s;
    Rational sign(r < 4 ? 1 : -1);
    s.c_[static_cast<size_t>(r % 4)] = sign;
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // Polynomial product reduced by w^4 = -1: w^(j+k) folds to -w^(j+k-4).
    std::array<Rational, 4> r{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (size_t j = 0; j < 4; ++j) {
        if (c_[j] == 0) continue;
        for (size_t k = 0; k < 4; ++k) {
            if (o.c_[k] == 0) continue;
            size_t d = j + k;
            if (d < 4)
                r[d] += c_[j] * o.c_[k];
            else
                r[d - 4] -= c_[j] * o.c_[k];
        }
    }
    c_ = r;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: zero");
    // Solve (this * x) = 1 as a 4x4 rational linear system. Columns of M are
    // the products this * w^k written in the 1, w, w^2, w^3 basis.
    Rational m[4][5];
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
            Scalar prod = *this * omega(col);
            m[row][col] = prod.coeff(row);
        }
        m[row][4] = Rational(row == 0 ? 1 : 0);
    }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int row = col; row < 4; ++row)
            if (m[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw std::domain_error("Scalar::inverse: singular (impossible in a field)");
        if (piv != col)
            for (int k = col; k < 5; ++k) std::swap(m[piv][k], m[col][k]);
        Rational inv = Rational(1) / m[col][col];
        for (int k = col; k < 5; ++k) m[col][k] *= inv;
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col];
            for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return Scalar(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Scalar Scalar::conj() const {
    // w -> -w^3, so (-w^3)^2 = -w^2 and (-w^3)^3 = -w.
    return Scalar(c_[0], -c_[3], -c_[2], -c_[1]);
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << rat_str(c_[0]) << " + " << rat_str(c_[1]) << "*w + " << rat_str(c_[2]) << "*w^2 + "
       << rat_str(c_[3]) << "*w^3";
    return os.str();
}

Scalar Scalar::parse(const std::string& s) {
    // Expects the exact canonical shape produced by str().
    auto fail = [&]() -> Scalar {
        throw std::invalid_argument("Scalar::parse: malformed '" + s + "'");
    };
    std::array<std::string, 4> parts;
    std::array<std::string, 3> seps = {" + ", " + ", " + "};
    size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        size_t next = s.find(seps[static_cast<size_t>(k)], pos);
        if (next == std::string::npos) return fail();
        parts[static_cast<size_t>(k)] = s.substr(pos, next - pos);
        pos = next + 3;
    }
    parts[3] = s.substr(pos);
    std::array<std::string, 4> tails = {"", "*w", "*w^2", "*w^3"};
    std::array<Rational, 4> c;
    for (size_t k = 0; k < 4; ++k) {
        const std::string& t = tails[k];
        std::string& p = parts[k];
        if (p.size() < t.size() || p.substr(p.size() - t.size()) != t) return fail();
        c[k] = rat_parse(p.substr(0, p.size() - t.size()));
    }
    return Scalar(c[0], c[1], c[2], c[3]);
}

}  // namespace osptoda
