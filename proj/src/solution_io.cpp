#include "prioclust/solution_io.hpp"

#include "prioclust/instance_io.hpp"

namespace prioclust {

std::vector<std::string> opened_ids(const Instance& inst, const Solution& solution) {
  std::vector<std::string> ids;
  for (int f : solution.opened) ids.push_back(inst.facilities()[f].id);
  return ids;
}

nlohmann::json solution_to_json(const Instance& inst, const Solution& solution) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& entry : solution.trace) {
    nlohmann::json path = nlohmann::json::array();
    for (int v : entry.path) path.push_back(inst.clients()[v].id);
    trace.push_back({{"path", path},
                     {"facility", inst.facilities()[entry.facility].id},
                     {"rule", entry.rule}});
  }
  nlohmann::json doc;
  doc["algorithm"] = solution.algorithm;
  doc["alpha"] = rational_to_json(solution.alpha);
  doc["opened"] = opened_ids(inst, solution);
  doc["realized_ratio"] = rational_to_json(solution.realized_ratio);
  doc["covered_per_color"] = solution.covered_per_color;
  doc["centers_used"] = solution.centers_used;
  doc["weight_used"] = solution.weight_used;
  doc["trace"] = std::move(trace);
  return doc;
}

}  // namespace prioclust
