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

#ifndef OSPTODA_ROOT_DATA_HPP
#define OSPTODA_ROOT_DATA_HPP

#include <string>
#include <vector>

#include "osptoda/rational.hpp"

namespace osptoda {

/// Root as integer coordinates over the orthonormal basis e_1..e_l.
using RootVec = std::vector<int>;

/// Weight with rational coordinates over e_1..e_l.
struct WeightVector {
    std::vector<Rational> coords;

    explicit WeightVector(int l = 0) : coords(static_cast<size_t>(l), Rational(0)) {}
    int l() const { return static_cast<int>(coords.size()); }
    const Rational& operator[](size_t i) const { return coords[i]; }
    Rational& operator[](size_t i) { return coords[i]; }

    WeightVector operator+(const WeightVector& o) const;
    WeightVector operator-(const WeightVector& o) const;
    WeightVector scaled(const Rational& r) const;
    bool operator==(const WeightVector& o) const { return coords == o.coords; }
};

/// Euclidean pairing with (e_i, e_j) = delta_ij; throws on length mismatch.
Rational weyl_pairing(const WeightVector& u, const WeightVector& v);
Rational root_pairing(const RootVec& a, const RootVec& b);
Rational root_weight_pairing(const RootVec& a, const WeightVector& v);
WeightVector to_weight(const RootVec& a);

/// "2e1", "e1-e2", "-e1+e2", ... Coordinates in index order, unit
/// coefficients implicit.
std::string root_str(const RootVec& a);
RootVec root_negate(const RootVec& a);
RootVec root_add(const RootVec& a, const RootVec& b);

enum class RootSystemType { B0, C, BC };

struct SimpleRoot {
    RootVec vec;
    int parity;  // 1 = odd, 0 = even
};

/// Rank-l root system of type B0 (the distinguished super system with odd
/// short roots), C, or BC (non-reduced: both e_l and 2e_l are simple).
struct RootSystem {
    RootSystemType type;
    int l;
    std::vector<SimpleRoot> simple;          // documented fixed order per type
    std::vector<RootVec> positive_even;
    std::vector<RootVec> positive_odd;

    static RootSystem make(RootSystemType type, int l);

    std::vector<RootVec> all_positive() const;
};

/// A_ij = 2 (a_i, a_j) / (a_i, a_i) over the system's simple order.
std::vector<std::vector<Rational>> cartan_matrix(const RootSystem& rs);

/// Determinant of a square rational matrix (Gaussian elimination).
Rational matrix_det(std::vector<std::vector<Rational>> m);

/// Half-sum of even positive roots minus half-sum of odd positive roots.
WeightVector rho(const RootSystem& rs);

/// Expands a positive root in the system's simple roots and returns the
/// coefficient sum. Uses the l linearly independent simple roots (for BC
/// the doubled root is skipped in the expansion basis). Throws if the root
/// is not a nonnegative integer combination.
long root_height(const RootSystem& rs, const RootVec& root);

}  // namespace osptoda

#endif
