#pragma once

#include <json.hpp>

#include "funcpert/besov.hpp"
#include "funcpert/bipoly.hpp"
#include "funcpert/matnum.hpp"

// Internal bridge between the public string-based serializers in io.hpp and
// the report writer in suites.cpp.
namespace funcpert::detail {

nlohmann::json matrix_json(const CMatrix& m);
CMatrix matrix_from_json_obj(const nlohmann::json& j);

nlohmann::json bipoly_json(const BiPolynomial& f);
BiPolynomial bipoly_from_json_obj(const nlohmann::json& j);

}  // namespace funcpert::detail
