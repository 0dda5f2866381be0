#pragma once

#include <cstdint>
#include <vector>

#include "prioclust/contact.hpp"
#include "prioclust/lp.hpp"

namespace prioclust {

struct PathPacking {
  std::vector<std::vector<int>> paths;  // contact-graph node sequences
  std::vector<std::int64_t> value;      // per color, each node counted once
  std::int64_t budget_used = 0;         // path count, or total endpoint weight
};

/// Per-color lambda summed over the union of the nodes on `paths`.
std::vector<std::int64_t> packing_value(const ContactGraph& graph,
                                        const std::vector<std::vector<int>>& paths);

/// Maximum-value packing of at most k directed paths in a contact DAG, where
/// node value is lambda of the first color. Solved as min-cost flow on the
/// split-node network by successive shortest paths.
PathPacking solve_wkpp(const ContactGraph& graph, std::int64_t k);

/// Knapsack path packing on an out-forest: choose endpoint nodes with total
/// weight w' at most `budget`; each endpoint contributes its root path.
/// Value is first-color lambda over the covered nodes.
PathPacking solve_wknappp(const ContactGraph& graph, std::int64_t budget);

/// Root-to-node path in a forest.
std::vector<int> root_path(const std::vector<int>& parents, int node);

/// The colorful path-packing LP over a forest: y per leaf, z per internal
/// node, both in [0,1]; maximize lambda_objective . (y, z); one >= m_i row per
/// other color; z_v <= sum of y over leaves below v; sum of y <= k.
struct WckppLp {
  lp::Problem problem;
  std::vector<int> node_variable;  // node -> variable index
  std::vector<char> is_leaf;
  int objective_color = 0;         // 0-based
};

WckppLp build_wckpp_lp(const ContactGraph& forest, const std::vector<std::int64_t>& requirements,
                       std::int64_t k, int objective_color = 0);

struct WckppVertex {
  lp::Status status = lp::Status::kInfeasible;
  std::vector<Rational> value;      // per node: y for leaves, z for internal nodes
  Rational objective;
  std::vector<int> fractional_leaves;
};

WckppVertex solve_wckpp(const WckppLp& lp);

/// Opens every leaf with y > 0 and returns its root path. Throws
/// InvariantViolation when more than 2c leaves are fractional.
PathPacking round_wckpp(const WckppVertex& vertex, const WckppLp& lp, const ContactGraph& forest);

/// For forests of height <= 1: a tree with two or more leaves keeps its root
/// and the leaf with the largest lambda of `keep_color` (smallest id on ties);
/// its other leaves become singletons. Requires lambda[zero_color] = 0 on
/// every non-root leaf.
ContactGraph split_depth2_forest(const ContactGraph& forest, int keep_color, int zero_color);

}  // namespace prioclust
