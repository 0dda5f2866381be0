#include "prioclust/evaluate.hpp"

#include <algorithm>

#include "prioclust/errors.hpp"

namespace prioclust {

Evaluation evaluate_solution(const Instance& inst, const std::vector<std::string>& opened,
                             const Rational& threshold) {
  Evaluation result;
  result.covered_per_color.assign(inst.colors(), 0);
  std::vector<int> open_points;
  for (const auto& id : opened) {
    int point = -1;
    for (int p = inst.num_clients(); p < inst.num_points(); ++p) {
      if (inst.point_id(p) == id) point = p;
    }
    if (point < 0) throw ValidationError("unknown facility id '" + id + "'");
    if (std::find(open_points.begin(), open_points.end(), point) != open_points.end()) {
      throw ValidationError("facility '" + id + "' opened twice");
    }
    open_points.push_back(point);
    result.weight += inst.facilities()[point - inst.num_clients()].weight;
  }
  result.centers = static_cast<std::int64_t>(open_points.size());
  if (open_points.empty()) return result;
  for (int v = 0; v < inst.num_clients(); ++v) {
    Rational nearest = inst.point_distance(v, open_points.front());
    for (int p : open_points) nearest = std::min(nearest, inst.point_distance(v, p));
    if (nearest <= threshold * inst.radius(v)) {
      ++result.covered_per_color[inst.color(v) - 1];
      result.max_covered_ratio = std::max(result.max_covered_ratio, Rational(nearest / inst.radius(v)));
    }
  }
  return result;
}

}  // namespace prioclust
