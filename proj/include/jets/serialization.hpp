#pragma once

/**
 * @file serialization.hpp
 * @brief JSON encodings for the library's value types.
 *
 * LaurentPoly:   [{"exp": int, "num": "decimal", "den": "decimal"}, ...] by ascending exp
 * LaurentMatrix: {"rows": r, "cols": c, "entries": [[poly, ...], ...]} row-major
 *
 * Every encoder has a matching decoder; decode(encode(x)) == x.
 */

#include "jets/cohomology.hpp"
#include "jets/equivariant.hpp"
#include "jets/laurent_matrix.hpp"
#include "jets/splitting.hpp"
#include "jets/verify.hpp"

#include <json.hpp>

namespace jets {

using Json = nlohmann::json;

Json to_json(const LaurentPoly& p);
Json to_json(const LaurentMatrix& m);
Json to_json(const JetSpec& s);
Json to_json(const SplittingType& s);
Json to_json(const BirkhoffWitness& w);
Json to_json(const WeightModule& m);
Json to_json(const ModuleExpr& e);
Json to_json(const CohomologyTable& t);
Json to_json(const FiberReport& r);
Json to_json(const VerifyReport& r);

LaurentPoly laurent_poly_from_json(const Json& j);
LaurentMatrix laurent_matrix_from_json(const Json& j);
JetSpec jet_spec_from_json(const Json& j);
SplittingType splitting_type_from_json(const Json& j);
BirkhoffWitness birkhoff_witness_from_json(const Json& j);
WeightModule weight_module_from_json(const Json& j);
ModuleExpr module_expr_from_json(const Json& j);
CohomologyTable cohomology_table_from_json(const Json& j);
FiberReport fiber_report_from_json(const Json& j);
VerifyReport verify_report_from_json(const Json& j);

}  // namespace jets
