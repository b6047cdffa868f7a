#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "adapted/intmatrix.hpp"
#include "adapted/invariants.hpp"
#include "adapted/rewriter.hpp"

namespace adapted {

nlohmann::json to_json(const PrimeOrderData& d);

/// Accepts {"p", "n", "g0"}, {"p", "m", "g0"} or {"p", "t": 0, "g0"} and
/// validates. Extra fields (such as those we emit) are ignored.
PrimeOrderData data_from_json(const nlohmann::json& j);

nlohmann::json matrix_json(const IntMatrix& m, const std::vector<std::string>& labels);
nlohmann::json presentation_json(const Presentation& pres);

std::string matrix_text(const IntMatrix& m, const std::vector<std::string>& labels);
std::string matrix_csv(const IntMatrix& m, const std::vector<std::string>& labels);
std::string presentation_text(const Presentation& pres);

}  // namespace adapted
