#pragma once

#include "parcomod/hopf.hpp"

#include <json.hpp>

namespace parcomod {

using Json = nlohmann::json;

Json to_json(const FieldElem& a);
FieldElem field_from_json(const Json& j, int order);
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j, int order);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int order);

// Hopf algebra document: name, field, dim, basis, unit, mult, comult, counit,
// antipode (column j = S(b_j)), grouplikes; optional antipode_inverse and named.
Json hopf_to_json(const FiniteDimHopf& h);
FiniteDimHopf hopf_from_json(const Json& j);

}  // namespace parcomod
