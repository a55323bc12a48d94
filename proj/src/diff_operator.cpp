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

#include "osptoda/diff_operator.hpp"

#include <sstream>

namespace osptoda {

void DiffOperator::add_term(const OpKey& k, const GradedPoly& coeff) {
    if (coeff.is_zero()) return;
    if (static_cast<int>(k.exp.size()) != l_ || static_cast<int>(k.deriv.size()) != l_)
        throw std::invalid_argument("DiffOperator: key dimension mismatch");
    auto [it, fresh] = terms_.emplace(k, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    if (l_ != o.l_) throw std::invalid_argument("DiffOperator: rank mismatch");
    DiffOperator r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(l_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

DiffOperator DiffOperator::scaled(const GradedPoly& c) const {
    DiffOperator r(l_);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : terms_) r.add_term(k, x * c);
    return r;
}

DiffOperator DiffOperator::subst_coeffs(const std::map<std::string, GradedPoly>& values) const {
    DiffOperator r(l_);
    for (const auto& [k, c] : terms_) r.add_term(k, c.subst(values));
    return r;
}

DiffOperator DiffOperator::scale_exponentials(
    const std::function<GradedPoly(const std::vector<int>&)>& factor) const {
    DiffOperator r(l_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * factor(k.exp));
    return r;
}

bool DiffOperator::coefficients_rational_in(const std::vector<std::string>& symbols) const {
    for (const auto& [k, c] : terms_) {
        (void)k;
        if (!c.rational_in(symbols)) return false;
    }
    return true;
}

std::string DiffOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "[" << c.str() << "]";
        for (int i = 0; i < l_; ++i)
            if (k.exp[static_cast<size_t>(i)])
                os << " e^(" << k.exp[static_cast<size_t>(i)] << "q" << (i + 1) << ")";
        for (int i = 0; i < l_; ++i)
            if (k.deriv[static_cast<size_t>(i)]) {
                os << " d/dq" << (i + 1);
                if (k.deriv[static_cast<size_t>(i)] > 1) os << "^" << k.deriv[static_cast<size_t>(i)];
            }
    }
    return os.str();
}

DiffOperator conjugate_by_rho(const DiffOperator& op, const WeightVector& rho_vec) {
    int l = op.l();
    if (rho_vec.l() != l) throw std::invalid_argument("conjugate_by_rho: rank mismatch");
    DiffOperator out(l);
    for (const auto& [k, c] : op.terms()) {
        // Expand prod_i (d_i + rho_i)^{m_i}.
        std::vector<std::pair<std::vector<int>, Rational>> parts{{std::vector<int>(), Rational(1)}};
        parts[0].first.assign(static_cast<size_t>(l), 0);
        for (int i = 0; i < l; ++i) {
            int m = k.deriv[static_cast<size_t>(i)];
            if (m == 0) continue;
            std::vector<std::pair<std::vector<int>, Rational>> next;
            for (const auto& [dv, coef] : parts) {
                for (int kk = m; kk >= 0; --kk) {
                    // C(m, kk) * rho^(m-kk) * d^kk
                    Rational b(1);
                    for (int t = 0; t < m - kk; ++t) b *= Rational(m - t) / Rational(t + 1);
                    std::vector<int> nd = dv;
                    nd[static_cast<size_t>(i)] = kk;
                    next.emplace_back(nd,
                                      coef * b * rat_pow(rho_vec[static_cast<size_t>(i)], m - kk));
                }
            }
            parts = std::move(next);
        }
        for (const auto& [dv, coef] : parts) out.add_term(OpKey{k.exp, dv}, c.scaled(Scalar(coef)));
    }
    return out;
}

DiffOperator specialize_couplings(const DiffOperator& op,
                                  const std::map<std::string, Rational>& values) {
    std::map<std::string, GradedPoly> polys;
    for (const auto& [name, r] : values) polys[name] = GradedPoly(r);
    DiffOperator r = op.subst_coeffs(polys);
    for (const auto& [k, c] : r.terms()) {
        (void)k;
        if (!c.is_constant() || !c.constant_term().is_rational())
            throw UnboundSymbol("specialize_couplings: residual symbols in " + c.str());
    }
    return r;
}

}  // namespace osptoda
