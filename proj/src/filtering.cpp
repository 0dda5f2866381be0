#include "prioclust/filtering.hpp"

#include <algorithm>

#include "prioclust/errors.hpp"

namespace prioclust {

ClusterFamily filter(const Instance& inst, const std::vector<int>& clients,
                     const std::vector<Rational>& cov, const Rational& slack) {
  if (sgn(slack) < 0) throw PreconditionError("filter slack must be nonnegative");
  ClusterFamily family;
  family.slack = slack;
  std::vector<int> remaining = clients;
  std::sort(remaining.begin(), remaining.end());
  while (!remaining.empty()) {
    int best = remaining.front();
    for (int u : remaining) {
      if (cov[u] > cov[best]) best = u;
    }
    std::vector<int> cluster;
    std::vector<int> rest;
    for (int u : remaining) {
      if (inst.client_distance(u, best) <= inst.radius(u) + inst.radius(best) + slack) {
        cluster.push_back(u);
      } else {
        rest.push_back(u);
      }
    }
    family.representatives.push_back(best);
    family.clusters.push_back(std::move(cluster));
    remaining = std::move(rest);
  }
  return family;
}

int radius_class(const Rational& radius, const Rational& unit, const Rational& base_squared) {
  if (base_squared <= 1) throw PreconditionError("layer base must exceed 1");
  const Rational rho = radius / unit;
  if (rho < 1) throw PreconditionError("radius below the normalization unit");
  const Rational rho_squared = rho * rho;
  Rational bound = base_squared;
  int index = 1;
  while (rho_squared >= bound) {
    bound *= base_squared;
    ++index;
  }
  return index;
}

namespace {

Rational smallest_radius(const Instance& inst) {
  Rational unit = inst.radius(0);
  for (int v = 1; v < inst.num_clients(); ++v) unit = std::min(unit, inst.radius(v));
  return unit;
}

}  // namespace

LayerPlan build_layer_plan(const Instance& inst, const std::vector<int>& clients,
                           const Rational& base_squared, LayerMode mode) {
  LayerPlan plan;
  plan.base_squared = base_squared;
  plan.unit = smallest_radius(inst);
  for (int v : clients) {
    // All radii are zero at a zero threshold; one class then suffices.
    const int index = sgn(plan.unit) == 0 ? 1 : radius_class(inst.radius(v), plan.unit, base_squared);
    if (static_cast<int>(plan.classes.size()) < index) plan.classes.resize(index);
    plan.classes[index - 1].push_back(v);
  }
  if (plan.classes.empty()) plan.classes.resize(1);
  for (auto& cls : plan.classes) std::sort(cls.begin(), cls.end());

  const int t = static_cast<int>(plan.classes.size());
  if (mode == LayerMode::kAscending) {
    for (int i = 1; i <= t; ++i) plan.order.push_back(i);
    plan.middle = 0;
  } else {
    // 0-based class j; the descending side takes the parity of t - 1.
    for (int j = t - 1; j >= 0; j -= 2) plan.order.push_back(j + 1);
    for (int j = (t % 2 == 0) ? 0 : 1; j < t; j += 2) plan.order.push_back(j + 1);
    const int pivot_class = (t % 2 == 0 || t == 1) ? 1 : 2;
    plan.middle = static_cast<int>(std::find(plan.order.begin(), plan.order.end(), pivot_class) -
                                   plan.order.begin());
  }
  for (int cls : plan.order) plan.layers.push_back(plan.classes[cls - 1]);
  return plan;
}

LayerPlan custom_layer_plan(const Instance& inst, std::vector<std::vector<int>> layers,
                            int middle) {
  LayerPlan plan;
  plan.unit = smallest_radius(inst);
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  for (int pos = 0; pos < static_cast<int>(layers.size()); ++pos) plan.order.push_back(pos + 1);
  plan.classes = layers;
  plan.layers = std::move(layers);
  plan.middle = middle;
  return plan;
}

Rational ascending_slack(const LayerPlan& plan, int class_index) {
  return plan.unit * power(Rational(4), class_index);
}

}  // namespace prioclust
