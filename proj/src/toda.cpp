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

#include "osptoda/toda.hpp"

#include <sstream>

namespace osptoda {

namespace {

void factor_into(std::map<std::string, Rational>& out, mpz_class n, const Rational& mult) {
    if (n < 0) throw NonPositiveCoupling("LogExpr: logarithm of a non-positive value");
    if (n == 0) throw NonPositiveCoupling("LogExpr: logarithm of zero");
    mpz_class d(2);
    while (d * d <= n) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out["p:" + d.get_str()] += mult;
            n /= d;
        }
        ++d;
    }
    if (n > 1) out["p:" + n.get_str()] += mult;
}

void drop_zeros(std::map<std::string, Rational>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
}

// A coupling must be c * (single even monomial) with c > 0 rational.
struct CouplingParts {
    Rational coeff;
    Monomial mono;
};

CouplingParts coupling_parts(const GradedPoly& g) {
    if (g.terms().size() != 1)
        throw NonPositiveCoupling("coupling must be a single positive monomial: " + g.str());
    const auto& [m, c] = *g.terms().begin();
    if (!c.is_rational() || c.rational_part() <= 0)
        throw NonPositiveCoupling("coupling must be positive rational times a monomial: " +
                                  g.str());
    if (m.parity() != 0)
        throw NonPositiveCoupling("coupling must be even: " + g.str());
    return {c.rational_part(), m};
}

LogExpr log_of_coupling(const GradedPoly& g) {
    CouplingParts parts = coupling_parts(g);
    LogExpr e = LogExpr::of_rational(parts.coeff);
    const auto& tab = SymbolTable::instance();
    for (const auto& [id, exp] : parts.mono.exps)
        e = e + LogExpr::of_symbol(tab.name(id)).scaled(Rational(exp));
    return e;
}

}  // namespace

LogExpr LogExpr::of_rational(const Rational& r) {
    if (r <= 0) throw NonPositiveCoupling("LogExpr: logarithm of non-positive rational");
    LogExpr e;
    factor_into(e.coeffs, r.get_num(), Rational(1));
    factor_into(e.coeffs, r.get_den(), Rational(-1));
    drop_zeros(e.coeffs);
    return e;
}

LogExpr LogExpr::of_symbol(const std::string& name) {
    LogExpr e;
    e.coeffs["s:" + name] = Rational(1);
    return e;
}

LogExpr LogExpr::operator+(const LogExpr& o) const {
    LogExpr r = *this;
    for (const auto& [k, v] : o.coeffs) r.coeffs[k] += v;
    drop_zeros(r.coeffs);
    return r;
}

LogExpr LogExpr::operator-(const LogExpr& o) const { return *this + o.scaled(Rational(-1)); }

LogExpr LogExpr::scaled(const Rational& r) const {
    LogExpr out;
    if (r == 0) return out;
    for (const auto& [k, v] : coeffs) out.coeffs[k] = v * r;
    return out;
}

std::string LogExpr::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(v) << "*ln(" << k.substr(2) << ")";
    }
    return os.str();
}

GradedPoly exp_logexpr(const LogExpr& e) {
    Rational coeff(1);
    Monomial m;
    const auto& tab = SymbolTable::instance();
    for (const auto& [k, v] : e.coeffs) {
        if (v.get_den() != 1)
            throw std::domain_error("exp_logexpr: non-integer coefficient " + rat_str(v) +
                                    " of ln(" + k.substr(2) + ")");
        long n = v.get_num().get_si();
        if (k.rfind("p:", 0) == 0) {
            coeff *= rat_pow(rat_parse(k.substr(2)), n);
        } else {
            int id = tab.id(k.substr(2));
            m.exps[id] += static_cast<int>(n);
            if (m.exps[id] == 0) m.exps.erase(id);
        }
    }
    GradedPoly out;
    out.add_term(m, Scalar(coeff));
    return out;
}

TodaSpec bc_spec(int l, const std::vector<GradedPoly>& chain_first) {
    if (static_cast<int>(chain_first.size()) != l + 1)
        throw std::invalid_argument("bc_spec: expected l+1 couplings");
    TodaSpec spec;
    spec.rs = RootSystem::make(RootSystemType::BC, l);
    // Simple order of the system is (e_l, 2e_l, chain closest-to-short
    // first); the caller's list is chain-first with the short and doubled
    // roots last.
    spec.couplings.assign(spec.rs.simple.size(), GradedPoly::one());
    spec.couplings[0] = chain_first[static_cast<size_t>(l - 1)];
    spec.couplings[1] = chain_first[static_cast<size_t>(l)];
    for (int k = 2; k < static_cast<int>(spec.rs.simple.size()); ++k) {
        // simple[k] = e_{l+1-k} - e_{l+2-k}  <->  chain index i = l+1-k
        spec.couplings[static_cast<size_t>(k)] = chain_first[static_cast<size_t>(l + 1 - k - 1)];
    }
    return spec;
}

TodaSpec bc_spec_rational(int l, const std::vector<Rational>& chain_first) {
    std::vector<GradedPoly> g;
    g.reserve(chain_first.size());
    for (const auto& r : chain_first) g.emplace_back(r);
    return bc_spec(l, g);
}

TodaSpec osp_spec_symbolic(int l) {
    std::vector<GradedPoly> g(static_cast<size_t>(l + 1));
    // Chain root e_i - e_{i+1} carries 2*k_{l+1-i}^2; the short root e_l is
    // simple root number 1 so carries 2*k_1^2; the doubled root 4*k_1^4.
    for (int i = 1; i < l; ++i) {
        GradedPoly ksq = GradedPoly::symbol("k" + std::to_string(l + 1 - i) + "sq", 0);
        g[static_cast<size_t>(i - 1)] = ksq.scaled(Scalar(2));
    }
    GradedPoly k1 = GradedPoly::symbol("k1sq", 0);
    g[static_cast<size_t>(l - 1)] = k1.scaled(Scalar(2));
    g[static_cast<size_t>(l)] = (k1 * k1).scaled(Scalar(4));
    return bc_spec(l, g);
}

TodaSpec osp_spec_rational(int l, const std::vector<Rational>& kappa_sq) {
    if (static_cast<int>(kappa_sq.size()) != l)
        throw std::invalid_argument("osp_spec_rational: expected l couplings");
    std::vector<GradedPoly> g(static_cast<size_t>(l + 1));
    for (int i = 1; i < l; ++i)
        g[static_cast<size_t>(i - 1)] =
            GradedPoly(Rational(2) * kappa_sq[static_cast<size_t>(l - i)]);
    g[static_cast<size_t>(l - 1)] = GradedPoly(Rational(2) * kappa_sq[0]);
    g[static_cast<size_t>(l)] = GradedPoly(Rational(4) * kappa_sq[0] * kappa_sq[0]);
    return bc_spec(l, g);
}

DiffOperator build_toda(const TodaSpec& spec) {
    int l = spec.rs.l;
    DiffOperator h(l);
    for (int i = 0; i < l; ++i) {
        std::vector<int> deriv(static_cast<size_t>(l), 0);
        deriv[static_cast<size_t>(i)] = 2;
        h.add_term(OpKey{std::vector<int>(static_cast<size_t>(l), 0), deriv},
                   GradedPoly(Rational(-1)));
    }
    for (size_t k = 0; k < spec.rs.simple.size(); ++k)
        h.add_term(OpKey{spec.rs.simple[k].vec, std::vector<int>(static_cast<size_t>(l), 0)},
                   spec.couplings[k]);
    return h;
}

CanonicalizeResult canonicalize(const TodaSpec& spec) {
    const int l = spec.rs.l;
    bool is_bc = spec.rs.type == RootSystemType::BC;

    // Independent simple roots and their log-couplings.
    std::vector<RootVec> roots;
    std::vector<LogExpr> rhs;
    for (size_t k = 0; k < spec.rs.simple.size(); ++k) {
        if (is_bc && k == 1) continue;  // the doubled root is dependent
        roots.push_back(spec.rs.simple[k].vec);
        rhs.push_back(log_of_coupling(spec.couplings[k]).scaled(Rational(-1)));
    }
    if (static_cast<int>(roots.size()) != l)
        throw std::invalid_argument("canonicalize: simple system is not of full rank l");

    // Solve a_i(c) = -ln g_i by rational elimination with LogExpr right
    // sides.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(l),
                                         std::vector<Rational>(static_cast<size_t>(l)));
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c)
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                Rational(roots[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    std::vector<LogExpr> b = rhs;
    for (int col = 0; col < l; ++col) {
        int piv = -1;
        for (int row = col; row < l; ++row)
            if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw std::invalid_argument("canonicalize: singular simple-root system");
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
        std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(col)]);
        Rational inv = Rational(1) / m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int k = 0; k < l; ++k) m[static_cast<size_t>(col)][static_cast<size_t>(k)] *= inv;
        b[static_cast<size_t>(col)] = b[static_cast<size_t>(col)].scaled(inv);
        for (int row = 0; row < l; ++row) {
            if (row == col) continue;
            Rational f = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int k = 0; k < l; ++k)
                m[static_cast<size_t>(row)][static_cast<size_t>(k)] -=
                    f * m[static_cast<size_t>(col)][static_cast<size_t>(k)];
            b[static_cast<size_t>(row)] =
                b[static_cast<size_t>(row)] - b[static_cast<size_t>(col)].scaled(f);
        }
    }

    CanonicalizeResult res;
    res.shift = b;
    res.canonical = apply_shift(spec, b);
    if (is_bc) {
        res.doubled_coupling = res.canonical.couplings[1];
        res.is_osp_class = (res.doubled_coupling == GradedPoly::one());
    } else {
        res.doubled_coupling = GradedPoly::one();
        res.is_osp_class = true;
    }
    return res;
}

std::optional<Rational> CouplingRatio::as_rational() const {
    if (!num.is_constant() || !den.is_constant()) return std::nullopt;
    if (!num.constant_term().is_rational() || !den.constant_term().is_rational())
        return std::nullopt;
    return num.constant_term().rational_part() / den.constant_term().rational_part();
}

CouplingRatio osp_class_invariant(const TodaSpec& spec) {
    if (spec.rs.type != RootSystemType::BC)
        throw std::invalid_argument("osp_class_invariant: BC spec required");
    const GradedPoly& short_c = spec.couplings[0];
    const GradedPoly& doubled_c = spec.couplings[1];
    return CouplingRatio{doubled_c, short_c * short_c};
}

TodaSpec apply_shift(const TodaSpec& spec, const std::vector<LogExpr>& c) {
    if (static_cast<int>(c.size()) != spec.rs.l)
        throw std::invalid_argument("apply_shift: rank mismatch");
    TodaSpec out = spec;
    for (size_t k = 0; k < spec.rs.simple.size(); ++k) {
        const RootVec& a = spec.rs.simple[k].vec;
        LogExpr ac;
        for (size_t i = 0; i < a.size(); ++i)
            ac = ac + c[i].scaled(Rational(a[i]));
        out.couplings[k] = spec.couplings[k] * exp_logexpr(ac);
    }
    return out;
}

DiffOperator shift_operator(const DiffOperator& op, const std::vector<LogExpr>& c) {
    return op.scale_exponentials([&](const std::vector<int>& n) {
        LogExpr nc;
        for (size_t i = 0; i < n.size(); ++i) nc = nc + c[i].scaled(Rational(n[i]));
        return exp_logexpr(nc);
    });
}

std::vector<LogExpr> shift_of_rationals(const std::vector<Rational>& t) {
    std::vector<LogExpr> c;
    c.reserve(t.size());
    for (const auto& x : t) c.push_back(LogExpr::of_rational(x));
    return c;
}

}  // namespace osptoda
