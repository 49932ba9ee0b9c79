#pragma once

#include <json.hpp>

#include "suncs/fundamental.hpp"
#include "suncs/types.hpp"

namespace suncs {

/// Complex numbers serialize as [re, im]; matrices as row-major arrays of
/// rows; angle sets as {"xi": [...], "phi": [...]}; trees as
/// {"theta", "phi", "left", "right"} with SU(2) leaves {"theta", "phi1", "phi2"}.

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);

nlohmann::json angles_to_json(const AngleCoordinates& a);
AngleCoordinates angles_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const DecompositionTree& t);
DecompositionTree tree_from_json(const nlohmann::json& j);

}  // namespace suncs
