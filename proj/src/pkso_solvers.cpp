#include <algorithm>
#include <functional>
#include <numeric>

#include "prioclust/errors.hpp"
#include "prioclust/filtering.hpp"
#include "prioclust/solvers.hpp"
#include "solver_common.hpp"

namespace prioclust {

using detail::first_covering_facility;

Solution solve_ksupplier_outliers(const Instance& inst) {
  const std::string name = "ksupplier-outliers";
  detail::require_single_color(inst, name);
  if (detail::distinct_radii(inst).size() != 1) {
    throw PreconditionError(name + " requires all radii equal");
  }
  auto round = [&](const Instance& scaled, const Rational&) {
    const auto cov = detail::coverage_point(scaled, false);
    const auto family = filter(scaled, scaled.coverable_clients(), cov, Rational(0));
    std::vector<int> order(family.representatives.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return family.clusters[a].size() > family.clusters[b].size();
    });
    const auto take = std::min<std::int64_t>(scaled.k(), static_cast<std::int64_t>(order.size()));
    Solution solution;
    solution.algorithm = name;
    std::vector<int> certified;
    for (std::int64_t j = 0; j < take; ++j) {
      const int rep = family.representatives[order[j]];
      solution.trace.push_back({{rep}, first_covering_facility(scaled, rep), "largest-cluster"});
      certified.insert(certified.end(), family.clusters[order[j]].begin(),
                       family.clusters[order[j]].end());
    }
    std::sort(certified.begin(), certified.end());
    detail::check_requirements(inst, certified, name);
    finalize_solution(inst, certified, solution);
    return solution;
  };
  return decision_search(inst, detail::coverage_lp_probe(false), round);
}

namespace {

using PlanBuilder = std::function<LayerPlan(const Instance& scaled, const std::vector<int>& clients)>;

// Layered rounding shared by the PkSO solvers: filter each layer, build the
// contact DAG, pack k paths, and open one facility per path at the middle.
Solution solve_layered(const Instance& inst, const std::string& name, const PlanBuilder& build) {
  auto round = [&](const Instance& scaled, const Rational&) {
    const auto cov = detail::coverage_point(scaled, false);
    const LayerPlan plan = build(scaled, scaled.coverable_clients());
    std::vector<ClusterFamily> families;
    for (const auto& layer : plan.layers) families.push_back(filter(scaled, layer, cov, Rational(0)));
    const ContactGraph dag = build_contact_dag(scaled, plan, families);
    const PathPacking packing = solve_wkpp(dag, scaled.k());

    Solution solution;
    solution.algorithm = name;
    for (const auto& path : packing.paths) {
      const PathOpening opening = middle_edge_of_path(dag, path, plan.middle);
      TraceEntry entry;
      entry.path = detail::path_clients(dag, path);
      if (opening.is_edge) {
        entry.facility = dag.find_edge(opening.from, opening.to)->witness;
        entry.rule = "middle-edge";
      } else {
        entry.facility = first_covering_facility(scaled, dag.nodes[opening.from].client);
        entry.rule = "endpoint";
      }
      solution.trace.push_back(std::move(entry));
    }
    const auto certified = detail::path_members(dag, packing.paths);
    detail::check_requirements(inst, certified, name);
    finalize_solution(inst, certified, solution);
    return solution;
  };
  return decision_search(inst, detail::coverage_lp_probe(false), round);
}

// Clients of `clients` whose original radius is one of `radii`. Classes are
// read off the original instance so a zero threshold cannot merge them.
std::vector<int> with_radius(const Instance& original, const std::vector<int>& clients,
                             const std::vector<Rational>& radii) {
  std::vector<int> result;
  for (int v : clients) {
    if (std::find(radii.begin(), radii.end(), original.radius(v)) != radii.end()) {
      result.push_back(v);
    }
  }
  return result;
}

}  // namespace

Solution solve_pkso(const Instance& inst) {
  detail::require_single_color(inst, "pkso");
  return solve_layered(inst, "pkso", [](const Instance& scaled, const std::vector<int>& clients) {
    return build_layer_plan(scaled, clients, Rational(3), LayerMode::kAlternating);
  });
}

Solution solve_pkso_powers_of_b(const Instance& inst, const Rational& b) {
  const std::string name = "pkso-powers";
  detail::require_single_color(inst, name);
  if (b <= 1) throw PreconditionError(name + " requires b > 1");
  const auto radii = detail::distinct_radii(inst);
  for (const auto& r : radii) {
    Rational rho = r / radii.front();
    while (rho > 1 && rho >= b) rho /= b;
    if (rho != 1) {
      throw PreconditionError(name + ": radius " + to_string(r) + " is not " +
                              to_string(radii.front()) + " times a power of " + to_string(b));
    }
  }
  const Rational b_squared = b * b;
  return solve_layered(inst, name, [b_squared](const Instance& scaled, const std::vector<int>& clients) {
    return build_layer_plan(scaled, clients, b_squared, LayerMode::kAlternating);
  });
}

Solution solve_pkso_two_radii(const Instance& inst) {
  const std::string name = "pkso-2radii";
  detail::require_single_color(inst, name);
  if (detail::distinct_radii(inst).size() != 2) {
    throw PreconditionError(name + " requires exactly two distinct radii, instance has " +
                            std::to_string(detail::distinct_radii(inst).size()));
  }
  return solve_layered(inst, name, [&inst](const Instance& scaled, const std::vector<int>& clients) {
    const auto levels = detail::distinct_radii(inst);
    return custom_layer_plan(scaled,
                             {with_radius(inst, clients, {levels[0]}),
                              with_radius(inst, clients, {levels[1]})},
                             1);
  });
}

ThreeRadiiChoice choose_three_radii_partition(const Rational& r0, const Rational& r1,
                                              const Rational& r2) {
  if (!(r0 < r1 && r1 < r2)) throw PreconditionError("three radii must be strictly increasing");
  const Rational a = 3 + 2 * r0 / r2;
  const Rational b = 1 + 2 * r2 / r1;
  const Rational c = 1 + 2 * r1 / r0;
  if (a <= b && a <= c) return {'a', a};
  if (b <= c) return {'b', b};
  return {'c', c};
}

Solution solve_pkso_three_radii(const Instance& inst) {
  const std::string name = "pkso-3radii";
  detail::require_single_color(inst, name);
  const auto radii = detail::distinct_radii(inst);
  if (radii.size() != 3) {
    throw PreconditionError(name + " requires exactly three distinct radii, instance has " +
                            std::to_string(radii.size()));
  }
  const char partition = choose_three_radii_partition(radii[0], radii[1], radii[2]).partition;
  return solve_layered(inst, name, [&inst, &radii, partition](const Instance& scaled,
                                                              const std::vector<int>& clients) {
    const auto& r = radii;
    auto pick = [&](std::vector<Rational> levels) { return with_radius(inst, clients, levels); };
    switch (partition) {
      case 'a':
        return custom_layer_plan(scaled, {pick({r[2]}), pick({r[0]}), pick({r[1]})}, 2);
      case 'b':
        return custom_layer_plan(scaled, {pick({r[0]}), pick({r[1], r[2]})}, 1);
      default:
        return custom_layer_plan(scaled, {pick({r[0], r[1]}), pick({r[2]})}, 1);
    }
  });
}

}  // namespace prioclust
