#include <algorithm>
#include <optional>

#include "prioclust/errors.hpp"
#include "prioclust/filtering.hpp"
#include "prioclust/solvers.hpp"
#include "solver_common.hpp"

namespace prioclust {

namespace {

// Solves and rounds the colorful packing LP on `forest`, checks the result
// against the requirements and the center allowance, and records one trace
// entry per opened path via `open`.
template <typename OpenFn>
Solution pack_and_open(const Instance& original, const Instance& scaled, const ContactGraph& forest,
                       int objective_color, std::int64_t allowance, const std::string& name,
                       OpenFn open) {
  const WckppLp lp = build_wckpp_lp(forest, scaled.requirements(), scaled.k(), objective_color);
  const WckppVertex vertex = solve_wckpp(lp);
  if (vertex.status != lp::Status::kOptimal) {
    throw InvariantViolation(name + ": path-packing LP infeasible although the coverage LP is feasible");
  }
  const PathPacking packing = round_wckpp(vertex, lp, forest);
  if (packing.budget_used > allowance) {
    throw InvariantViolation(name + ": rounding opened " + std::to_string(packing.budget_used) +
                             " paths, allowance " + std::to_string(allowance));
  }
  Solution solution;
  solution.algorithm = name;
  for (const auto& path : packing.paths) solution.trace.push_back(open(path));
  const auto certified = detail::path_members(forest, packing.paths);
  detail::check_requirements(original, certified, name);
  finalize_solution(original, certified, solution);
  return solution;
}

}  // namespace

Solution solve_pcks(const Instance& inst) {
  const std::string name = "pcks";
  auto round = [&](const Instance& scaled, const Rational&) {
    const auto cov = detail::coverage_point(scaled, false);
    const LayerPlan plan = build_layer_plan(scaled, scaled.coverable_clients(), Rational(16),
                                            LayerMode::kAscending);
    std::vector<ClusterFamily> families;
    for (int pos = 0; pos < plan.num_layers(); ++pos) {
      families.push_back(
          filter(scaled, plan.layers[pos], cov, ascending_slack(plan, plan.order[pos])));
    }
    const ContactGraph forest = build_contact_forest(scaled, plan, families);
    const std::int64_t allowance = scaled.k() + 2 * scaled.colors() - 1;
    return pack_and_open(inst, scaled, forest, 0, allowance, name, [&](const std::vector<int>& path) {
      const int leaf = forest.nodes[path.back()].client;
      return TraceEntry{detail::path_clients(forest, path),
                        detail::first_covering_facility(scaled, leaf), "leaf"};
    });
  };
  return decision_search(inst, detail::coverage_lp_probe(false), round);
}

Solution solve_upcks_two_colors(const Instance& inst) {
  const std::string name = "upcks2";
  if (inst.colors() != 2) {
    throw PreconditionError(name + " requires exactly two colors, instance has " +
                            std::to_string(inst.colors()));
  }
  std::vector<std::optional<Rational>> color_radius(2);
  for (const auto& c : inst.clients()) {
    auto& r = color_radius[c.color - 1];
    if (r && *r != c.radius) {
      throw PreconditionError(name + " requires one radius per color; color " +
                              std::to_string(c.color) + " has " + to_string(*r) + " and " +
                              to_string(c.radius));
    }
    r = c.radius;
  }
  if (!color_radius[0]) color_radius[0] = color_radius[1];
  if (!color_radius[1]) color_radius[1] = color_radius[0];
  // 0-based colors: `small` has the smaller radius (color 1 on ties).
  const int small = *color_radius[1] < *color_radius[0] ? 1 : 0;
  const int large = 1 - small;
  const bool joint = within_golden_ratio(*color_radius[small], *color_radius[large]);

  auto round = [&](const Instance& scaled, const Rational& alpha) {
    const auto cov = detail::coverage_point(scaled, false);
    const auto clients = scaled.coverable_clients();
    const std::int64_t allowance = scaled.k() + 1;
    auto cover_leaf = [&](const ContactGraph& forest, const std::vector<int>& path) {
      const int leaf = forest.nodes[path.back()].client;
      return TraceEntry{detail::path_clients(forest, path),
                        detail::first_covering_facility(scaled, leaf), "cover"};
    };
    if (joint) {
      const LayerPlan plan = custom_layer_plan(scaled, {clients}, 0);
      const ContactGraph singletons =
          build_contact_forest(scaled, plan, {filter(scaled, clients, cov, Rational(0))});
      return pack_and_open(inst, scaled, singletons, 0, allowance, name,
                           [&](const std::vector<int>& path) { return cover_leaf(singletons, path); });
    }
    std::vector<int> small_clients;
    std::vector<int> large_clients;
    for (int v : clients) (scaled.color(v) - 1 == small ? small_clients : large_clients).push_back(v);
    const Rational small_radius = *color_radius[small] * alpha;
    const LayerPlan plan = custom_layer_plan(scaled, {small_clients, large_clients}, 1);
    const std::vector<ClusterFamily> families{
        filter(scaled, small_clients, cov, Rational(0)),
        filter(scaled, large_clients, cov, 2 * small_radius)};
    const ContactGraph forest = forest_from_dag(build_contact_dag(scaled, plan, families));
    const ContactGraph split = split_depth2_forest(forest, small, large);
    return pack_and_open(inst, scaled, split, small, allowance, name,
                         [&](const std::vector<int>& path) {
                           if (path.size() == 2) {
                             return TraceEntry{detail::path_clients(split, path),
                                               split.find_edge(path[0], path[1])->witness,
                                               "edge-witness"};
                           }
                           return cover_leaf(split, path);
                         });
  };
  return decision_search(inst, detail::coverage_lp_probe(false), round);
}

}  // namespace prioclust
