#pragma once

#include <string>

#include "json.hpp"
#include "prioclust/instance.hpp"
#include "prioclust/solution.hpp"

namespace prioclust {

/// { "algorithm", "alpha", "opened": [ids], "realized_ratio",
///   "covered_per_color", "centers_used", "weight_used",
///   "trace": [ {"path": [client ids], "facility": id, "rule": str} ] }
nlohmann::json solution_to_json(const Instance& inst, const Solution& solution);

/// Facility ids of `solution.opened`.
std::vector<std::string> opened_ids(const Instance& inst, const Solution& solution);

}  // namespace prioclust
