#include "prioclust/solvers.hpp"

#include <algorithm>
#include <set>

#include "prioclust/coverage_lp.hpp"
#include "prioclust/errors.hpp"
#include "solver_common.hpp"

namespace prioclust {

void finalize_solution(const Instance& original, const std::vector<int>& certified,
                       Solution& solution) {
  std::set<int> opened;
  for (const auto& entry : solution.trace) opened.insert(entry.facility);
  solution.opened.assign(opened.begin(), opened.end());
  solution.centers_used = static_cast<std::int64_t>(solution.opened.size());
  solution.weight_used = 0;
  for (int f : solution.opened) solution.weight_used += original.facilities()[f].weight;

  // best[v] = d(v, opened) / r_v; undefined when nothing is open.
  std::vector<Rational> best(original.num_clients());
  for (int v = 0; v < original.num_clients(); ++v) {
    for (std::size_t j = 0; j < solution.opened.size(); ++j) {
      const Rational r = original.client_facility_distance(v, solution.opened[j]) / original.radius(v);
      if (j == 0 || r < best[v]) best[v] = r;
    }
  }
  solution.realized_ratio = 0;
  if (!certified.empty() && solution.opened.empty()) {
    throw InvariantViolation("clients certified but no facility opened");
  }
  for (int v : certified) solution.realized_ratio = std::max(solution.realized_ratio, best[v]);
  solution.covered_per_color.assign(original.colors(), 0);
  if (solution.opened.empty()) return;
  for (int v = 0; v < original.num_clients(); ++v) {
    if (best[v] <= solution.realized_ratio) ++solution.covered_per_color[original.color(v) - 1];
  }
}

bool within_bound(const Bound& bound, const Rational& ratio, const Rational& alpha) {
  switch (bound.kind) {
    case Bound::Kind::kRational:
      return ratio <= bound.value * alpha;
    case Bound::Kind::kOnePlusThreeSqrt3: {
      const Rational excess = ratio - alpha;
      return sgn(excess) <= 0 || excess * excess <= 27 * alpha * alpha;
    }
    case Bound::Kind::kTwoPlusSqrt5: {
      const Rational excess = ratio - 2 * alpha;
      return sgn(excess) <= 0 || excess * excess <= 5 * alpha * alpha;
    }
  }
  return false;
}

bool within_golden_ratio(const Rational& r_small, const Rational& r_large) {
  const Rational lhs = 2 * r_large - r_small;
  return sgn(lhs) <= 0 || lhs * lhs <= 5 * r_small * r_small;
}

Rational powers_of_b_bound(const Rational& b) {
  if (b <= 1) throw PreconditionError("b must exceed 1");
  const Rational b2 = b * b;
  return (3 * b2 - 1) / (b2 - 1);
}

namespace detail {

std::vector<Rational> coverage_point(const Instance& scaled, bool weighted) {
  auto cov = solve_coverage_lp(scaled, weighted);
  if (!cov) throw InvariantViolation("coverage LP infeasible at an accepted alpha");
  return *cov;
}

ProbeFn coverage_lp_probe(bool weighted) {
  return [weighted](const Instance& scaled, const Rational&) {
    Probe probe;
    probe.verdict = solve_coverage_lp(scaled, weighted) ? Verdict::kFeasible : Verdict::kInfeasible;
    return probe;
  };
}

int first_covering_facility(const Instance& inst, int client) {
  for (int f = 0; f < inst.num_facilities(); ++f) {
    if (inst.covers(f, client)) return f;
  }
  return -1;
}

std::vector<int> path_members(const ContactGraph& graph,
                              const std::vector<std::vector<int>>& paths) {
  std::set<int> members;
  for (const auto& path : paths) {
    for (int node : path) members.insert(graph.nodes[node].members.begin(),
                                         graph.nodes[node].members.end());
  }
  return {members.begin(), members.end()};
}

std::vector<int> path_clients(const ContactGraph& graph, const std::vector<int>& path) {
  std::vector<int> clients;
  for (int node : path) clients.push_back(graph.nodes[node].client);
  return clients;
}

void check_requirements(const Instance& inst, const std::vector<int>& members,
                        const std::string& algorithm) {
  std::vector<std::int64_t> count(inst.colors(), 0);
  for (int v : members) ++count[inst.color(v) - 1];
  for (int i = 0; i < inst.colors(); ++i) {
    if (count[i] < inst.requirements()[i]) {
      throw InvariantViolation(algorithm + ": rounding covers " + std::to_string(count[i]) +
                               " clients of color " + std::to_string(i + 1) + ", needs " +
                               std::to_string(inst.requirements()[i]));
    }
  }
}

std::vector<Rational> distinct_radii(const Instance& inst) {
  std::vector<Rational> radii;
  for (const auto& c : inst.clients()) radii.push_back(c.radius);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

void require_single_color(const Instance& inst, const std::string& algorithm) {
  if (inst.colors() != 1) {
    throw PreconditionError(algorithm + " requires a single color, instance has " +
                            std::to_string(inst.colors()));
  }
}

}  // namespace detail

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"ksupplier-outliers", "pkso",    "pkso-powers",
                                              "pkso-2radii",        "pkso-3radii", "pknapso",
                                              "pcks",               "upcks2"};
  return names;
}

Solution run_algorithm(const std::string& name, const Instance& inst, const SolverOptions& options) {
  if (name == "ksupplier-outliers") return solve_ksupplier_outliers(inst);
  if (name == "pkso") return solve_pkso(inst);
  if (name == "pkso-powers") {
    if (!options.b) throw PreconditionError("pkso-powers requires --b");
    return solve_pkso_powers_of_b(inst, *options.b);
  }
  if (name == "pkso-2radii") return solve_pkso_two_radii(inst);
  if (name == "pkso-3radii") return solve_pkso_three_radii(inst);
  if (name == "pknapso") return solve_pknapso(inst, options.backend, options.cut_cap);
  if (name == "pcks") return solve_pcks(inst);
  if (name == "upcks2") return solve_upcks_two_colors(inst);
  throw PreconditionError("unknown algorithm '" + name + "'");
}

Bound algorithm_bound(const std::string& name, const SolverOptions& options) {
  using Kind = Bound::Kind;
  if (name == "ksupplier-outliers" || name == "pkso-2radii") return {"3", Kind::kRational, 3};
  if (name == "pkso") return {"1+3sqrt3", Kind::kOnePlusThreeSqrt3, 0};
  if (name == "pkso-powers") {
    if (!options.b) throw PreconditionError("pkso-powers requires --b");
    return {"powers-of-b", Kind::kRational, powers_of_b_bound(*options.b)};
  }
  if (name == "pkso-3radii") return {"3.94", Kind::kRational, Rational(197, 50)};
  if (name == "pknapso" || name == "pcks") return {"17", Kind::kRational, 17};
  if (name == "upcks2") return {"2+sqrt5", Kind::kTwoPlusSqrt5, 0};
  throw PreconditionError("unknown algorithm '" + name + "'");
}

std::int64_t center_allowance(const std::string& name, const Instance& inst) {
  if (name == "pcks") return inst.k() + 2 * inst.colors() - 1;
  if (name == "upcks2") return inst.k() + 1;
  if (name == "pknapso") return inst.num_facilities();
  return inst.k();
}

bool uses_knapsack(const std::string& name) { return name == "pknapso"; }

}  // namespace prioclust
