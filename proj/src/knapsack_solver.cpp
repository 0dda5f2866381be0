#include <algorithm>
#include <optional>
#include <variant>

#include "prioclust/coverage_lp.hpp"
#include "prioclust/errors.hpp"
#include "prioclust/filtering.hpp"
#include "prioclust/solvers.hpp"
#include "solver_common.hpp"

namespace prioclust {

namespace {

const std::string kName = "pknapso";

// A valid inequality sum lambda(v) cov(v) <= rhs over representatives.
struct Cut {
  std::vector<std::pair<int, std::int64_t>> terms;  // (client, lambda)
  std::int64_t rhs = 0;
};

// Cheapest facility within r_v of client v (smallest index on ties).
int cheapest_covering_facility(const Instance& inst, int client) {
  int best = -1;
  for (int f = 0; f < inst.num_facilities(); ++f) {
    if (!inst.covers(f, client)) continue;
    if (best < 0 || inst.facilities()[f].weight < inst.facilities()[best].weight) best = f;
  }
  return best;
}

// Either rounds `cov` into a solution or returns an inequality that every
// affordable facility set satisfies and `cov` violates.
std::variant<Solution, Cut> round_or_cut(const Instance& original, const Instance& scaled,
                                         const std::vector<Rational>& cov) {
  const LayerPlan plan = build_layer_plan(scaled, scaled.coverable_clients(), Rational(16),
                                          LayerMode::kAscending);
  std::vector<ClusterFamily> families;
  for (int pos = 0; pos < plan.num_layers(); ++pos) {
    families.push_back(filter(scaled, plan.layers[pos], cov, ascending_slack(plan, plan.order[pos])));
  }
  const ContactGraph forest = build_contact_forest(scaled, plan, families);
  const PathPacking packing = solve_wknappp(forest, scaled.k());
  const std::int64_t m = scaled.requirements()[0];
  if (packing.value[0] < m) {
    Cut cut;
    cut.rhs = packing.value[0];
    for (const auto& node : forest.nodes) cut.terms.push_back({node.client, node.lambda[0]});
    return cut;
  }
  Solution solution;
  solution.algorithm = kName;
  for (const auto& path : packing.paths) {
    const int sink = forest.nodes[path.back()].client;
    solution.trace.push_back(
        {detail::path_clients(forest, path), cheapest_covering_facility(scaled, sink), "cheapest-at-sink"});
  }
  const auto certified = detail::path_members(forest, packing.paths);
  detail::check_requirements(original, certified, kName);
  finalize_solution(original, certified, solution);
  if (solution.weight_used > original.k()) throw InvariantViolation("knapsack budget exceeded");
  return solution;
}

// Coverage patterns of affordable facility sets, deduplicated and reduced
// to the inclusion-maximal ones.
std::vector<std::vector<char>> maximal_patterns(const Instance& scaled) {
  const int nf = scaled.num_facilities();
  const int nc = scaled.num_clients();
  std::vector<std::vector<char>> patterns;
  for (std::uint32_t mask = 0; mask < (1u << nf); ++mask) {
    std::int64_t weight = 0;
    for (int f = 0; f < nf; ++f) {
      if (mask >> f & 1u) weight += scaled.facilities()[f].weight;
    }
    if (weight > scaled.k()) continue;
    std::vector<char> covered(nc, 0);
    for (int v = 0; v < nc; ++v) {
      for (int f = 0; f < nf && !covered[v]; ++f) {
        covered[v] = (mask >> f & 1u) && scaled.covers(f, v);
      }
    }
    patterns.push_back(std::move(covered));
  }
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  auto subset = [](const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !b[i]) return false;
    }
    return true;
  };
  std::vector<std::vector<char>> maximal;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < patterns.size() && !dominated; ++j) {
      dominated = j != i && subset(patterns[i], patterns[j]);
    }
    if (!dominated) maximal.push_back(patterns[i]);
  }
  return maximal;
}

// Point of the configuration polytope with total coverage >= m, if any.
std::optional<std::vector<Rational>> configuration_point(const Instance& scaled) {
  constexpr int kMaxFacilities = 15;
  if (scaled.num_facilities() > kMaxFacilities) {
    throw GuardExceeded("explicit knapsack backend supports at most 15 facilities");
  }
  const auto patterns = maximal_patterns(scaled);
  lp::Problem lp;
  std::vector<lp::Term> convexity;
  std::vector<lp::Term> coverage;
  for (std::size_t s = 0; s < patterns.size(); ++s) {
    const int z = lp.add_variable("z" + std::to_string(s), Rational(0), std::nullopt);
    convexity.push_back({z, Rational(1)});
    const auto size = std::count(patterns[s].begin(), patterns[s].end(), 1);
    if (size > 0) coverage.push_back({z, Rational(size)});
  }
  lp.add_constraint(std::move(convexity), lp::Relation::kLessEqual, Rational(1));
  lp.add_constraint(std::move(coverage), lp::Relation::kGreaterEqual,
                    Rational(scaled.requirements()[0]));
  const auto solution = lp::solve(lp);
  if (solution.status != lp::Status::kOptimal) return std::nullopt;
  std::vector<Rational> cov(scaled.num_clients());
  for (std::size_t s = 0; s < patterns.size(); ++s) {
    if (sgn(solution.values[s]) == 0) continue;
    for (int v = 0; v < scaled.num_clients(); ++v) {
      if (patterns[s][v]) cov[v] += solution.values[s];
    }
  }
  return cov;
}

Probe cutting_plane_probe(const Instance& original, const Instance& scaled, int cut_cap) {
  CoverageLp master = build_coverage_lp(scaled, true);
  for (int f = 0; f < scaled.num_facilities(); ++f) {
    if (scaled.facilities()[f].weight > scaled.k()) {
      master.problem.add_constraint({{master.facility_variable[f], Rational(1)}},
                                    lp::Relation::kLessEqual, Rational(0));
    }
  }
  for (int iteration = 0; iteration <= cut_cap; ++iteration) {
    const auto point = lp::solve(master.problem);
    if (point.status != lp::Status::kOptimal) return {Verdict::kInfeasible, std::nullopt};
    std::vector<Rational> cov;
    for (int v = 0; v < scaled.num_clients(); ++v) {
      cov.push_back(point.values[master.client_variable[v]]);
    }
    auto outcome = round_or_cut(original, scaled, cov);
    if (auto* solution = std::get_if<Solution>(&outcome)) {
      return {Verdict::kFeasible, std::move(*solution)};
    }
    const Cut& cut = std::get<Cut>(outcome);
    std::vector<lp::Term> row;
    for (const auto& [client, lambda] : cut.terms) {
      if (lambda != 0) row.push_back({master.client_variable[client], Rational(lambda)});
    }
    master.problem.add_constraint(std::move(row), lp::Relation::kLessEqual, Rational(cut.rhs));
  }
  return {Verdict::kUndecided, std::nullopt};
}

}  // namespace

Solution solve_pknapso(const Instance& inst, KnapsackBackend backend, int cut_cap) {
  detail::require_single_color(inst, kName);
  if (cut_cap < 0) throw PreconditionError("cut cap must be nonnegative");
  if (backend == KnapsackBackend::kExplicit) {
    auto probe = [](const Instance& scaled, const Rational&) {
      return Probe{configuration_point(scaled) ? Verdict::kFeasible : Verdict::kInfeasible,
                   std::nullopt};
    };
    auto round = [&inst](const Instance& scaled, const Rational&) {
      const auto cov = configuration_point(scaled);
      if (!cov) throw InvariantViolation("configuration LP infeasible at an accepted alpha");
      auto outcome = round_or_cut(inst, scaled, *cov);
      if (!std::holds_alternative<Solution>(outcome)) {
        throw InvariantViolation("knapsack rounding failed on a configuration-polytope point");
      }
      return std::get<Solution>(std::move(outcome));
    };
    return decision_search(inst, probe, round);
  }
  auto probe = [&inst, cut_cap](const Instance& scaled, const Rational&) {
    return cutting_plane_probe(inst, scaled, cut_cap);
  };
  auto round = [](const Instance&, const Rational&) -> Solution {
    throw InvariantViolation("cutting-plane probe accepted without a solution");
  };
  return decision_search(inst, probe, round);
}

}  // namespace prioclust
