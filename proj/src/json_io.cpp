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

#include "osptoda/json_io.hpp"

#include <regex>
#include <sstream>

namespace osptoda {

namespace {

// Registered parity when the symbol exists; odd eigenvalue symbols are
// recognizable by name when parsing in a fresh process.
int symbol_parity_for_parse(const std::string& name) {
    static const std::regex odd_xi("^xi1[pm]$");
    return std::regex_match(name, odd_xi) ? 1 : 0;
}

}  // namespace

json poly_to_json(const GradedPoly& p) {
    json terms = json::array();
    const auto& tab = SymbolTable::instance();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [id, e] : m.exps) mono[tab.name(id)] = e;
        terms.push_back(json{{"monomial", mono}, {"scalar", c.str()}});
    }
    return terms;
}

GradedPoly poly_from_json(const json& j) {
    GradedPoly p;
    for (const auto& term : j) {
        Monomial m;
        for (auto it = term.at("monomial").begin(); it != term.at("monomial").end(); ++it) {
            int id = SymbolTable::instance().intern(it.key(), symbol_parity_for_parse(it.key()));
            m.exps[id] = it.value().get<int>();
        }
        p.add_term(m, Scalar::parse(term.at("scalar").get<std::string>()));
    }
    return p;
}

json matrix_to_json(const SuperMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.n(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(row);
    }
    int par = m.parity() == Parity::Odd ? 1 : 0;
    return json{{"l", m.l()}, {"parity", par}, {"rows", rows}};
}

SuperMatrix matrix_from_json(const json& j) {
    SuperMatrix m(j.at("l").get<int>());
    const auto& rows = j.at("rows");
    for (int i = 0; i < m.n(); ++i)
        for (int k = 0; k < m.n(); ++k)
            m.at(i, k) = Scalar::parse(rows.at(static_cast<size_t>(i))
                                           .at(static_cast<size_t>(k))
                                           .get<std::string>());
    return m;
}

json op_to_json(const DiffOperator& op) {
    json terms = json::array();
    for (const auto& [k, c] : op.terms()) {
        json expj = json::object(), derj = json::object();
        for (int i = 0; i < op.l(); ++i) {
            if (k.exp[static_cast<size_t>(i)])
                expj["q" + std::to_string(i + 1)] = k.exp[static_cast<size_t>(i)];
            if (k.deriv[static_cast<size_t>(i)])
                derj["q" + std::to_string(i + 1)] = k.deriv[static_cast<size_t>(i)];
        }
        terms.push_back(json{{"coeff", poly_to_json(c)}, {"deriv", derj}, {"exp", expj}});
    }
    return json{{"l", op.l()}, {"terms", terms}};
}

DiffOperator op_from_json(const json& j) {
    int l = j.at("l").get<int>();
    DiffOperator op(l);
    for (const auto& term : j.at("terms")) {
        OpKey k;
        k.exp.assign(static_cast<size_t>(l), 0);
        k.deriv.assign(static_cast<size_t>(l), 0);
        for (auto it = term.at("exp").begin(); it != term.at("exp").end(); ++it)
            k.exp[static_cast<size_t>(std::stoi(it.key().substr(1)) - 1)] = it.value().get<int>();
        for (auto it = term.at("deriv").begin(); it != term.at("deriv").end(); ++it)
            k.deriv[static_cast<size_t>(std::stoi(it.key().substr(1)) - 1)] =
                it.value().get<int>();
        op.add_term(k, poly_from_json(term.at("coeff")));
    }
    return op;
}

json logexpr_to_json(const LogExpr& e) {
    json r = json::object();
    for (const auto& [k, v] : e.coeffs) r["ln(" + k.substr(2) + ")" + (k[0] == 'p' ? "" : "!")] =
        rat_str(v);
    // The "!" marks symbol bases apart from numeric ones.
    return r;
}

LogExpr logexpr_from_json(const json& j) {
    LogExpr e;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = it.key();  // ln(BASE) or ln(BASE)!
        bool is_symbol = !key.empty() && key.back() == '!';
        if (is_symbol) key.pop_back();
        std::string base = key.substr(3, key.size() - 4);
        e.coeffs[(is_symbol ? "s:" : "p:") + base] = rat_parse(it.value().get<std::string>());
    }
    return e;
}

json report_to_json(const RelationCheck& rc) {
    return json{{"checked", rc.checked},
                {"failures", rc.failures},
                {"pass", rc.pass()},
                {"suite", rc.family}};
}

RelationCheck report_from_json(const json& j) {
    RelationCheck rc;
    rc.family = j.at("suite").get<std::string>();
    rc.checked = j.at("checked").get<long>();
    rc.failures = j.at("failures").get<std::vector<std::string>>();
    return rc;
}

json basis_doc(const AlgebraTable& t) {
    json labels = json::array();
    json parity = json::object();
    for (int i = 0; i < t.size(); ++i) {
        labels.push_back(t.at(i).label);
        parity[t.at(i).label] = t.at(i).parity;
    }
    json brackets = json::object();
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b) {
            json expansion = json::array();
            for (const auto& [c, coef] : t.bracket(a, b))
                expansion.push_back(json::array({t.at(c).label, coef.str()}));
            brackets["[" + t.at(a).label + ", " + t.at(b).label + "]"] = expansion;
        }
    return json{{"basis", labels},
                {"brackets", brackets},
                {"l", t.l},
                {"parity", parity},
                {"schema", kSchema}};
}

json roots_doc(const RootSystem& rs) {
    json simple = json::array();
    for (const auto& s : rs.simple)
        simple.push_back(json{{"parity", s.parity}, {"root", root_str(s.vec)}});
    json pe = json::array(), po = json::array();
    for (const auto& r : rs.positive_even) pe.push_back(root_str(r));
    for (const auto& r : rs.positive_odd) po.push_back(root_str(r));
    auto cm = cartan_matrix(rs);
    json cmj = json::array();
    for (const auto& row : cm) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rat_str(x));
        cmj.push_back(r);
    }
    std::string type = rs.type == RootSystemType::B0 ? "b0"
                       : rs.type == RootSystemType::C ? "c"
                                                      : "bc";
    return json{{"cartan_matrix", cmj},
                {"cartan_det", rat_str(matrix_det(cm))},
                {"l", rs.l},
                {"positive_even", pe},
                {"positive_odd", po},
                {"schema", kSchema},
                {"simple", simple},
                {"type", type}};
}

json uea_element_to_json(const AlgebraTable& t, const UEAElement& e) {
    json terms = json::array();
    for (const auto& [w, c] : e.terms) {
        json word = json::array();
        for (int g : w) word.push_back(t.at(g).label);
        terms.push_back(json{{"coeff", c.str()}, {"word", word}});
    }
    return terms;
}

UEAElement uea_element_from_json(const AlgebraTable& t, const json& j) {
    UEAElement e;
    for (const auto& term : j) {
        std::vector<int> w;
        for (const auto& label : term.at("word")) w.push_back(t.index(label.get<std::string>()));
        e.add(w, Scalar::parse(term.at("coeff").get<std::string>()));
    }
    return e;
}

json casimir_doc(const AlgebraTable& t, const UEAElement& e, const std::string& form) {
    return json{{"form", form},
                {"l", t.l},
                {"schema", kSchema},
                {"terms", uea_element_to_json(t, e)}};
}

std::string reemit(const std::string& kind, const std::string& serialized) {
    json j = json::parse(serialized);
    if (kind == "scalar") return json(Scalar::parse(j.get<std::string>()).str()).dump();
    if (kind == "poly") return poly_to_json(poly_from_json(j)).dump();
    if (kind == "matrix") return matrix_to_json(matrix_from_json(j)).dump();
    if (kind == "operator") return op_to_json(op_from_json(j)).dump();
    if (kind == "report") return report_to_json(report_from_json(j)).dump();
    throw std::invalid_argument("reemit: unknown kind " + kind);
}

namespace {

std::string latex_symbol(const std::string& name) {
    static const std::regex xi("^xi([0-9]+)([pm])$"), g("^g([0-9]+)sq$"), k("^k([0-9]+)sq$"),
        lam("^lam([0-9]+)$"), mu("^mu([0-9]+)$");
    std::smatch m;
    if (std::regex_match(name, m, xi))
        return "\\xi^{" + std::string(m[2] == "p" ? "+" : "-") + "}_{\\alpha_{" + m[1].str() +
               "}}";
    if (std::regex_match(name, m, g)) return "g_{" + m[1].str() + "}^2";
    if (std::regex_match(name, m, k)) return "\\kappa_{" + m[1].str() + "}^2";
    if (std::regex_match(name, m, lam)) return "\\lambda_{" + m[1].str() + "}";
    if (std::regex_match(name, m, mu)) return "\\mu_{" + m[1].str() + "}";
    return name;
}

std::string latex_poly(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    const auto& tab = SymbolTable::instance();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string cs;
        if (c.is_rational())
            cs = rat_str(c.rational_part());
        else
            cs = "(" + c.str() + ")";
        if (!first) os << " + ";
        first = false;
        if (m.exps.empty()) {
            os << cs;
            continue;
        }
        if (cs != "1") os << cs << "\\,";
        for (const auto& [id, e] : m.exps) {
            os << latex_symbol(tab.name(id));
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

}  // namespace

std::string latex_operator(const DiffOperator& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : op.terms()) {
        std::string cs = latex_poly(c);
        if (!first) os << " + ";
        first = false;
        bool bare = k.exp == std::vector<int>(k.exp.size(), 0) &&
                    k.deriv == std::vector<int>(k.deriv.size(), 0);
        if (cs != "1" || bare) os << cs;
        std::ostringstream phase;
        bool any = false;
        for (size_t i = 0; i < k.exp.size(); ++i) {
            if (!k.exp[i]) continue;
            if (any) phase << "+";
            any = true;
            if (k.exp[i] == -1)
                phase << "-";
            else if (k.exp[i] != 1)
                phase << k.exp[i];
            phase << "q_{" << (i + 1) << "}";
        }
        if (any) os << "\\, e^{" << phase.str() << "}";
        for (size_t i = 0; i < k.deriv.size(); ++i) {
            if (!k.deriv[i]) continue;
            if (k.deriv[i] == 1)
                os << "\\,\\frac{\\partial}{\\partial q_{" << (i + 1) << "}}";
            else
                os << "\\,\\frac{\\partial^{" << k.deriv[i] << "}}{\\partial q_{" << (i + 1)
                   << "}^{" << k.deriv[i] << "}}";
        }
    }
    return os.str();
}

std::string latex_roots(const RootSystem& rs) {
    std::ostringstream os;
    os << "\\text{simple: } \\{";
    for (size_t i = 0; i < rs.simple.size(); ++i) {
        if (i) os << ",\\ ";
        os << root_str(rs.simple[i].vec);
    }
    os << "\\}\\quad A = \\begin{pmatrix}";
    auto cm = cartan_matrix(rs);
    for (size_t i = 0; i < cm.size(); ++i) {
        if (i) os << " \\\\ ";
        for (size_t j = 0; j < cm[i].size(); ++j) {
            if (j) os << " & ";
            os << rat_str(cm[i][j]);
        }
    }
    os << "\\end{pmatrix}";
    return os.str();
}

}  // namespace osptoda
