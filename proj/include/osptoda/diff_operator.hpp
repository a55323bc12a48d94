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

#ifndef OSPTODA_DIFF_OPERATOR_HPP
#define OSPTODA_DIFF_OPERATOR_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "osptoda/graded_poly.hpp"
#include "osptoda/root_data.hpp"

namespace osptoda {

struct UnboundSymbol : std::runtime_error {
    explicit UnboundSymbol(const std::string& w) : std::runtime_error(w) {}
};

/// One addend is coeff * e^{sum_i exp_i q_i} * prod_i (d/dq_i)^{deriv_i},
/// the coefficient standing to the left of the derivatives.
struct OpKey {
    std::vector<int> exp;    // integer exponential weight
    std::vector<int> deriv;  // nonnegative derivative multi-index
    bool operator<(const OpKey& o) const {
        if (exp != o.exp) return exp < o.exp;
        return deriv < o.deriv;
    }
    bool operator==(const OpKey& o) const { return exp == o.exp && deriv == o.deriv; }
};

/// Finite sum of exponential-coefficient differential monomials in the
/// torus variables q_1..q_l. Terms with equal keys are merged and zero
/// coefficients dropped, so equality is plain term-by-term comparison.
class DiffOperator {
   public:
    explicit DiffOperator(int l = 0) : l_(l) {}

    int l() const { return l_; }
    const std::map<OpKey, GradedPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const OpKey& k, const GradedPoly& coeff);
    void add_term(const OpKey& k, const Rational& coeff) { add_term(k, GradedPoly(coeff)); }

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-() const;
    DiffOperator operator-(const DiffOperator& o) const { return *this + (-o); }
    DiffOperator scaled(const GradedPoly& c) const;
    bool operator==(const DiffOperator& o) const { return l_ == o.l_ && terms_ == o.terms_; }
    bool operator!=(const DiffOperator& o) const { return !(*this == o); }

    /// Substitution in every coefficient polynomial.
    DiffOperator subst_coeffs(const std::map<std::string, GradedPoly>& values) const;

    /// Multiplies each term by a factor depending on its exponential key
    /// (used for exact coordinate shifts q -> q + c).
    DiffOperator scale_exponentials(
        const std::function<GradedPoly(const std::vector<int>&)>& factor) const;

    /// True when every coefficient is a rational polynomial in the given
    /// even symbols (no stray phases or odd symbols).
    bool coefficients_rational_in(const std::vector<std::string>& symbols) const;

    std::string str() const;

   private:
    int l_;
    std::map<OpKey, GradedPoly> terms_;
};

/// Exact conjugation e^{-rho(q)} op e^{rho(q)}: each d/dq_i becomes
/// d/dq_i + rho_i, expanded binomially.
DiffOperator conjugate_by_rho(const DiffOperator& op, const WeightVector& rho_vec);

/// Substitutes numeric values for the listed coupling symbols; throws
/// UnboundSymbol if any non-numeric coefficient survives.
DiffOperator specialize_couplings(const DiffOperator& op,
                                  const std::map<std::string, Rational>& values);

}  // namespace osptoda

#endif
