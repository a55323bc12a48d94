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

#include "osptoda/graded_poly.hpp"

#include <sstream>

namespace osptoda {

SymbolTable& SymbolTable::instance() {
    static SymbolTable t;
    return t;
}

int SymbolTable::intern(const std::string& name, int parity) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) {
        if (symbols_[static_cast<size_t>(it->second)].second != parity)
            throw std::invalid_argument("SymbolTable: parity clash for '" + name + "'");
        return it->second;
    }
    int id = static_cast<int>(symbols_.size());
    symbols_.emplace_back(name, parity);
    by_name_[name] = id;
    return id;
}

int SymbolTable::id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("SymbolTable: unknown '" + name + "'");
    return it->second;
}

const std::string& SymbolTable::name(int id) const {
    return symbols_.at(static_cast<size_t>(id)).first;
}

int SymbolTable::parity(int id) const { return symbols_.at(static_cast<size_t>(id)).second; }

int Monomial::parity() const {
    long odd = 0;
    const auto& tab = SymbolTable::instance();
    for (const auto& [id, e] : exps)
        if (tab.parity(id) == 1) odd += e;
    return static_cast<int>(((odd % 2) + 2) % 2);
}

GradedPoly GradedPoly::symbol(const std::string& name, int parity, int exp) {
    int id = SymbolTable::instance().intern(name, parity);
    GradedPoly p;
    if (exp == 0) return one();
    Monomial m;
    m.exps[id] = exp;
    p.add_term(m, Scalar::one());
    return p;
}

bool GradedPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
}

Scalar GradedPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar::zero() : it->second;
}

std::optional<int> GradedPoly::parity() const {
    std::optional<int> p;
    for (const auto& [m, c] : terms_) {
        int mp = m.parity();
        if (!p)
            p = mp;
        else if (*p != mp)
            return std::nullopt;
    }
    return p;
}

void GradedPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

// Merge exponent maps; drops zero exponents.
Monomial merge(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [id, e] : b.exps) {
        int v = (r.exps.count(id) ? r.exps[id] : 0) + e;
        if (v == 0)
            r.exps.erase(id);
        else
            r.exps[id] = v;
    }
    return r;
}

void check_single_odd(const Monomial& m) {
    const auto& tab = SymbolTable::instance();
    int first_odd = -1;
    for (const auto& [id, e] : m.exps) {
        (void)e;
        if (tab.parity(id) == 1) {
            if (first_odd >= 0)
                throw MixedOddProduct("GradedPoly: product mixes odd symbols '" +
                                      tab.name(first_odd) + "' and '" + tab.name(id) + "'");
            first_odd = id;
        }
    }
}

}  // namespace

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = merge(ma, mb);
            check_single_odd(m);
            r.add_term(m, ca * cb);
        }
    return r;
}

GradedPoly GradedPoly::scaled(const Scalar& c) const {
    GradedPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

GradedPoly GradedPoly::conj_coeffs() const {
    GradedPoly r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x.conj());
    return r;
}

GradedPoly GradedPoly::subst(const std::map<std::string, GradedPoly>& values) const {
    const auto& tab = SymbolTable::instance();
    std::map<int, const GradedPoly*> by_id;
    for (const auto& [name, p] : values) by_id[tab.id(name)] = &p;

    GradedPoly out;
    for (const auto& [m, c] : terms_) {
        GradedPoly term(c);
        Monomial kept;
        for (const auto& [id, e] : m.exps) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                kept.exps[id] = e;
                continue;
            }
            if (e < 0)
                throw std::domain_error("GradedPoly::subst: negative exponent of substituted '" +
                                        tab.name(id) + "'");
            for (int k = 0; k < e; ++k) term = term * *it->second;
        }
        GradedPoly keep;
        keep.add_term(kept, Scalar::one());
        out += term * keep;
    }
    return out;
}

bool GradedPoly::rational_in(const std::vector<std::string>& symbol_names) const {
    auto& tab = SymbolTable::instance();
    std::map<int, bool> allowed;
    for (const auto& n : symbol_names) allowed[tab.intern(n, 0)] = true;
    for (const auto& [m, c] : terms_) {
        if (!c.is_rational()) return false;
        for (const auto& [id, e] : m.exps) {
            (void)e;
            if (!allowed.count(id)) return false;
        }
    }
    return true;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    const auto& tab = SymbolTable::instance();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& [id, e] : m.exps) {
            os << " " << tab.name(id);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace osptoda
