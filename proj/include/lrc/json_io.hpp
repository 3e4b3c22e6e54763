#pragma once

// JSON serialization for fields, elements, matrices, codes, repair-set
// families, and construction plans.
//
//   field:   {"p": int, "e": int, "modulus": [int; e+1]}
//   element: [int; e], little-endian coefficients
//   matrix:  {"field": field, "rows": r, "cols": c,
//             "data": [[element, ...], ...] row-major}
//   code:    {"field": field, "n": n, "k": k, "G": matrix, "H": matrix?}
//            (an optional "plan" key round-trips construction metadata)
//   family:  {"n": int, "blocks": [[int], ...]} with 1-based coordinates
//   plan:    {"variant": "A"|"B", "r", "delta", "m", "u", "v", "w",
//             "q", "e"}

#include <optional>
#include <string>

#include <json.hpp>

#include "lrc/construct.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json elem_to_json(const Field& f, const Elem& x);
Elem elem_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const LinearCode& c);
LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const RepairFamily& fam);
RepairFamily family_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const ConstructionPlan& p);
ConstructionPlan plan_from_json(const nlohmann::json& j);

// File helpers used by the CLI: the code JSON with an optional embedded
// plan.
void write_code_file(const std::string& path, const LinearCode& c,
                     const std::optional<ConstructionPlan>& plan);
std::pair<LinearCode, std::optional<ConstructionPlan>> read_code_file(
    const std::string& path);

}  // namespace lrc
