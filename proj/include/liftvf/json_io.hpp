#pragma once

#include <json.hpp>

#include "liftvf/classify.hpp"
#include "liftvf/crosscap.hpp"
#include "liftvf/poly.hpp"
#include "liftvf/vector_field.hpp"

namespace liftvf {

using Json = nlohmann::ordered_json;

// {"terms":[{"c":"-3","m":{"V1":1,"W1":1}}, ...]} with exact coefficient
// strings, terms in canonical render order.
Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j, const VarTablePtr& table);

// {"k":2,"space":"codomain","label":"xi_e","components":[...]}
Json field_json(int k, const VectorField& f);
std::pair<int, VectorField> field_from_json(const Json& j);

// {"k":3,"domain":[...],"codomain":[...],"weights":{...},"degrees":{...}}
Json context_json(const CrossCapContext& ctx);

// h.json: {"alpha":["1","0"],"beta":["0","0","1"],"gamma1":"0","gamma2":"0"}
LinearFunction linear_function_from_json(const CrossCapContext& ctx, const Json& j);
Json linear_function_json(const LinearFunction& h);

}  // namespace liftvf
