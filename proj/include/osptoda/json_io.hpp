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

#ifndef OSPTODA_JSON_IO_HPP
#define OSPTODA_JSON_IO_HPP

#include <json.hpp>

#include "osptoda/algebra.hpp"
#include "osptoda/diff_operator.hpp"
#include "osptoda/radial.hpp"
#include "osptoda/toda.hpp"
#include "osptoda/uea.hpp"

namespace osptoda {

using json = nlohmann::json;

inline constexpr const char* kSchema = "osp-toda/1";

// Scalars travel as their canonical strings; polynomials as a list of
// {monomial, scalar}; keys are emitted through std::map, so every document
// is byte-deterministic.
json poly_to_json(const GradedPoly& p);
GradedPoly poly_from_json(const json& j);

json matrix_to_json(const SuperMatrix& m);
SuperMatrix matrix_from_json(const json& j);

json op_to_json(const DiffOperator& op);
DiffOperator op_from_json(const json& j);

json logexpr_to_json(const LogExpr& e);
LogExpr logexpr_from_json(const json& j);

json report_to_json(const RelationCheck& rc);
RelationCheck report_from_json(const json& j);

/// basis document: labels, parities and the full bracket table.
json basis_doc(const AlgebraTable& t);
json roots_doc(const RootSystem& rs);
json casimir_doc(const AlgebraTable& t, const UEAElement& e, const std::string& form);
json uea_element_to_json(const AlgebraTable& t, const UEAElement& e);
UEAElement uea_element_from_json(const AlgebraTable& t, const json& j);

/// Re-parses a document of the given kind and emits it again; used to pin
/// the emit -> parse -> emit fixed point. Kind is one of scalar, poly,
/// matrix, operator, report.
std::string reemit(const std::string& kind, const std::string& serialized);

std::string latex_operator(const DiffOperator& op);
std::string latex_roots(const RootSystem& rs);

}  // namespace osptoda

#endif
