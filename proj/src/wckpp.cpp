#include <algorithm>

#include "prioclust/errors.hpp"
#include "prioclust/pathpack.hpp"

namespace prioclust {

WckppLp build_wckpp_lp(const ContactGraph& forest, const std::vector<std::int64_t>& requirements,
                       std::int64_t k, int objective_color) {
  if (forest.kind != GraphKind::kForest) throw PreconditionError("WCkPP expects a contact forest");
  const int n = forest.num_nodes();
  const int colors = static_cast<int>(requirements.size());
  if (objective_color < 0 || objective_color >= colors) {
    throw PreconditionError("objective color out of range");
  }
  if (n > 0 && forest.colors() != colors) throw PreconditionError("requirement count mismatch");

  WckppLp result;
  result.objective_color = objective_color;
  const auto parents = forest.parents();
  result.is_leaf.assign(n, 1);
  for (int v = 0; v < n; ++v) {
    if (parents[v] >= 0) result.is_leaf[parents[v]] = 0;
  }
  auto& lp = result.problem;
  for (int v = 0; v < n; ++v) {
    const std::string name = (result.is_leaf[v] ? "y" : "z") + std::to_string(v);
    result.node_variable.push_back(lp.add_variable(name, Rational(0), Rational(1)));
  }
  std::vector<lp::Term> objective;
  for (int v = 0; v < n; ++v) {
    const auto l = forest.nodes[v].lambda[objective_color];
    if (l != 0) objective.push_back({result.node_variable[v], Rational(l)});
  }
  lp.set_objective(lp::Sense::kMaximize, std::move(objective));

  for (int i = 0; i < colors; ++i) {
    if (i == objective_color) continue;
    std::vector<lp::Term> row;
    for (int v = 0; v < n; ++v) {
      const auto l = forest.nodes[v].lambda[i];
      if (l != 0) row.push_back({result.node_variable[v], Rational(l)});
    }
    lp.add_constraint(std::move(row), lp::Relation::kGreaterEqual, Rational(requirements[i]));
  }
  // Leaves of each subtree, gathered by walking up from every leaf.
  std::vector<std::vector<int>> leaves_below(n);
  for (int leaf = 0; leaf < n; ++leaf) {
    if (!result.is_leaf[leaf]) continue;
    for (int v = parents[leaf]; v >= 0; v = parents[v]) leaves_below[v].push_back(leaf);
  }
  for (int v = 0; v < n; ++v) {
    if (result.is_leaf[v]) continue;
    std::vector<lp::Term> row{{result.node_variable[v], Rational(1)}};
    std::sort(leaves_below[v].begin(), leaves_below[v].end());
    for (int leaf : leaves_below[v]) row.push_back({result.node_variable[leaf], Rational(-1)});
    lp.add_constraint(std::move(row), lp::Relation::kLessEqual, Rational(0));
  }
  std::vector<lp::Term> budget;
  for (int v = 0; v < n; ++v) {
    if (result.is_leaf[v]) budget.push_back({result.node_variable[v], Rational(1)});
  }
  lp.add_constraint(std::move(budget), lp::Relation::kLessEqual, Rational(k));
  return result;
}

WckppVertex solve_wckpp(const WckppLp& lp) {
  WckppVertex vertex;
  if (lp.problem.num_variables() == 0) {
    // Empty forest: feasible only when every requirement row is trivially met.
    vertex.status = lp::satisfies(lp.problem, {}) ? lp::Status::kOptimal : lp::Status::kInfeasible;
    return vertex;
  }
  const auto solution = lp::solve(lp.problem);
  vertex.status = solution.status;
  if (solution.status != lp::Status::kOptimal) return vertex;
  vertex.objective = solution.objective_value;
  const int n = static_cast<int>(lp.node_variable.size());
  for (int v = 0; v < n; ++v) {
    const Rational& x = solution.values[lp.node_variable[v]];
    vertex.value.push_back(x);
    if (lp.is_leaf[v] && sgn(x) > 0 && x < 1) vertex.fractional_leaves.push_back(v);
  }
  return vertex;
}

PathPacking round_wckpp(const WckppVertex& vertex, const WckppLp& lp, const ContactGraph& forest) {
  if (vertex.status != lp::Status::kOptimal) throw PreconditionError("rounding needs an optimal vertex");
  const int colors = forest.colors();
  if (static_cast<int>(vertex.fractional_leaves.size()) > 2 * std::max(colors, 1)) {
    throw InvariantViolation("WCkPP vertex has " + std::to_string(vertex.fractional_leaves.size()) +
                             " fractional leaves, more than 2c");
  }
  const auto parents = forest.parents();
  PathPacking packing;
  for (int v = 0; v < forest.num_nodes(); ++v) {
    if (lp.is_leaf[v] && sgn(vertex.value[v]) > 0) packing.paths.push_back(root_path(parents, v));
  }
  packing.budget_used = static_cast<std::int64_t>(packing.paths.size());
  packing.value = packing_value(forest, packing.paths);
  return packing;
}

ContactGraph split_depth2_forest(const ContactGraph& forest, int keep_color, int zero_color) {
  if (forest.kind != GraphKind::kForest) throw PreconditionError("split expects a forest");
  const auto parents = forest.parents();
  std::vector<std::vector<int>> children(forest.num_nodes());
  for (const auto& e : forest.edges) children[e.from].push_back(e.to);
  for (int v = 0; v < forest.num_nodes(); ++v) {
    if (parents[v] < 0) continue;
    if (parents[parents[v]] >= 0 || !children[v].empty()) {
      throw PreconditionError("split needs trees of height at most 1");
    }
    if (forest.nodes[v].lambda[zero_color] != 0) {
      throw PreconditionError("split needs leaves without clients of the large color");
    }
  }
  ContactGraph split = forest;
  split.edges.clear();
  for (const auto& e : forest.edges) {
    const auto& kids = children[e.from];
    int keep = kids.front();
    for (int c : kids) {
      if (forest.nodes[c].lambda[keep_color] > forest.nodes[keep].lambda[keep_color]) keep = c;
    }
    if (e.to == keep) split.edges.push_back(e);
  }
  return split;
}

}  // namespace prioclust
