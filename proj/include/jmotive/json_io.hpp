#pragma once

#include <json.hpp>

#include "jmotive/idempotent_lab.hpp"
#include "jmotive/jvalue.hpp"
#include "jmotive/kac_table.hpp"
#include "jmotive/motive.hpp"
#include "jmotive/poly.hpp"

namespace jmotive {

using Json = nlohmann::json;

// Coefficient array, index = degree.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const ConstraintRule& rule);
ConstraintRule rule_from_json(const Json& j);

// {"form", "p", "r", "d", "k", "rules"}
Json to_json(const TableRow& row);
TableRow table_row_from_json(const Json& j);

// {"p": 2, "j": [...]}
Json to_json(const JInvariant& j);
// The torsion data supplies d and k, which the document does not carry.
JInvariant jinvariant_from_json(const Json& j, const TorsionData& data);

// {"summand": [...], "multiplicities": [...], "total": [...]}
Json to_json(const MotiveDecomposition& m);
MotiveDecomposition decomposition_from_json(const Json& j);

// {"modulus": m, "rows": [[...], ...]}
Json to_json(const ModMatrix& a);
ModMatrix mod_matrix_from_json(const Json& j);

// Rows of integers; entries outside int64 are written as decimal strings.
Json to_json(const IntMatrix& a);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

}  // namespace jmotive
