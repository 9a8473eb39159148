#pragma once

#include <string>

#include <json.hpp>

#include "ccrlab/antisym_bounds.hpp"
#include "ccrlab/fock_core.hpp"

namespace ccr {

using json = nlohmann::json;

/// Row-major array of arrays of finite doubles. `path` names the field in
/// ValidationError messages.
RMatrix real_matrix_from_json(const json& j, const std::string& path);
json to_json(const RMatrix& m);
json to_json(const RealAntisymMatrix& m);

/// Complex matrices are row-major arrays of [re, im] pairs.
json to_json(const CMatrix& m);
CMatrix complex_matrix_from_json(const json& j, const std::string& path);

/// {"modes": m, "cutoff": N, "entries": [[[re, im], ...], ...]}
json to_json(const OperatorMatrix& m);
OperatorMatrix operator_matrix_from_json(const json& j);

/// Deterministic text: object keys sorted, doubles as %.17g, no whitespace
/// beyond a newline-and-indent layout.
std::string dump_stable(const json& j, int indent = 2);

} // namespace ccr
