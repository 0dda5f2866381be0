#include <algorithm>
#include <limits>

#include "prioclust/errors.hpp"
#include "prioclust/pathpack.hpp"

namespace prioclust {

std::vector<int> root_path(const std::vector<int>& parents, int node) {
  std::vector<int> path;
  for (int v = node; v >= 0; v = parents[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min() / 4;

using Table = std::vector<std::int64_t>;  // best value with cost <= b, kNone if impossible

// Max-plus merge of a running (any, nonempty) pair with one child's
// (best, nonempty) pair. "any" allows no endpoint; "nonempty" needs one.
struct Stage {
  Table any;
  Table nonempty;
};

Stage merge(const Stage& acc, const Table& child_best, const Table& child_nonempty) {
  const int width = static_cast<int>(acc.any.size());
  Stage next{Table(width, kNone), Table(width, kNone)};
  for (int b = 0; b < width; ++b) {
    for (int b1 = 0; b1 <= b; ++b1) {
      const int b2 = b - b1;
      if (acc.any[b1] != kNone && child_best[b2] != kNone) {
        next.any[b] = std::max(next.any[b], acc.any[b1] + child_best[b2]);
      }
      if (acc.nonempty[b1] != kNone && child_best[b2] != kNone) {
        next.nonempty[b] = std::max(next.nonempty[b], acc.nonempty[b1] + child_best[b2]);
      }
      if (acc.any[b1] != kNone && child_nonempty[b2] != kNone) {
        next.nonempty[b] = std::max(next.nonempty[b], acc.any[b1] + child_nonempty[b2]);
      }
    }
  }
  return next;
}

class KnapsackForestDp {
 public:
  KnapsackForestDp(const ContactGraph& graph, int width)
      : graph_(graph), width_(width), parents_(graph.parents()) {
    children_.resize(graph.num_nodes());
    for (int v = 0; v < graph.num_nodes(); ++v) {
      if (parents_[v] >= 0) children_[parents_[v]].push_back(v);
      else roots_.push_back(v);
    }
    stages_.resize(graph.num_nodes());
    best_.resize(graph.num_nodes());
    nonempty_.resize(graph.num_nodes());
    // Edges point to lower positions, so children come first in increasing
    // position order.
    std::vector<int> order(graph.num_nodes());
    for (int v = 0; v < graph.num_nodes(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return graph.nodes[a].position < graph.nodes[b].position;
    });
    for (int v : order) solve_node(v);
    root_stages_ = merge_children(roots_);
  }

  std::int64_t value() const { return root_stages_.back().any[width_ - 1]; }

  std::vector<int> endpoints() const {
    std::vector<int> chosen;
    unwind_children(roots_, root_stages_, width_ - 1, /*need_nonempty=*/false, chosen);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  const std::vector<int>& parents() const { return parents_; }

 private:
  std::vector<Stage> merge_children(const std::vector<int>& kids) const {
    std::vector<Stage> stages;
    Stage start{Table(width_, 0), Table(width_, kNone)};
    stages.push_back(start);
    for (int c : kids) stages.push_back(merge(stages.back(), best_[c], nonempty_[c]));
    return stages;
  }

  void solve_node(int v) {
    stages_[v] = merge_children(children_[v]);
    const Stage& all = stages_[v].back();
    const auto lambda = graph_.nodes[v].lambda[0];
    const auto& weight = graph_.nodes[v].weight;
    Table nonempty(width_, kNone);
    for (int b = 0; b < width_; ++b) {
      std::int64_t best = all.nonempty[b];
      if (weight && *weight <= b) best = std::max(best, all.any[b - *weight]);
      if (best != kNone) nonempty[b] = best + lambda;
    }
    Table best(width_);
    for (int b = 0; b < width_; ++b) best[b] = std::max<std::int64_t>(0, nonempty[b]);
    nonempty_[v] = std::move(nonempty);
    best_[v] = std::move(best);
  }

  // Recovers endpoints below a node (or the roots) achieving stages.back()
  // at budget b, in the "any" or "nonempty" table.
  void unwind_children(const std::vector<int>& kids, const std::vector<Stage>& stages, int b,
                       bool need_nonempty, std::vector<int>& chosen) const {
    for (int s = static_cast<int>(kids.size()); s >= 1; --s) {
      const int c = kids[s - 1];
      const Stage& prev = stages[s - 1];
      const std::int64_t target = need_nonempty ? stages[s].nonempty[b] : stages[s].any[b];
      bool found = false;
      for (int b1 = 0; b1 <= b && !found; ++b1) {
        const int b2 = b - b1;
        if (!need_nonempty) {
          if (prev.any[b1] != kNone && prev.any[b1] + best_[c][b2] == target) {
            unwind_node_best(c, b2, chosen);
            b = b1;
            found = true;
          }
          continue;
        }
        if (prev.nonempty[b1] != kNone && prev.nonempty[b1] + best_[c][b2] == target) {
          unwind_node_best(c, b2, chosen);
          b = b1;
          found = true;
        } else if (prev.any[b1] != kNone && nonempty_[c][b2] != kNone &&
                   prev.any[b1] + nonempty_[c][b2] == target) {
          unwind_node_nonempty(c, b2, chosen);
          b = b1;
          need_nonempty = false;
          found = true;
        }
      }
      if (!found) throw InvariantViolation("knapsack path DP reconstruction failed");
    }
    if (need_nonempty) throw InvariantViolation("knapsack path DP lost its endpoint");
  }

  void unwind_node_best(int v, int b, std::vector<int>& chosen) const {
    if (best_[v][b] > 0) unwind_node_nonempty(v, b, chosen);
  }

  void unwind_node_nonempty(int v, int b, std::vector<int>& chosen) const {
    const Stage& all = stages_[v].back();
    const auto lambda = graph_.nodes[v].lambda[0];
    const std::int64_t target = nonempty_[v][b] - lambda;
    const auto& weight = graph_.nodes[v].weight;
    if (weight && *weight <= b && all.any[b - *weight] == target) {
      chosen.push_back(v);
      unwind_children(children_[v], stages_[v], b - static_cast<int>(*weight), false, chosen);
      return;
    }
    unwind_children(children_[v], stages_[v], b, true, chosen);
  }

  const ContactGraph& graph_;
  int width_;
  std::vector<int> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<int> roots_;
  std::vector<std::vector<Stage>> stages_;
  std::vector<Table> best_;
  std::vector<Table> nonempty_;
  std::vector<Stage> root_stages_;
};

}  // namespace

PathPacking solve_wknappp(const ContactGraph& graph, std::int64_t budget) {
  if (graph.kind != GraphKind::kForest) throw PreconditionError("WKnapPP expects a contact forest");
  if (budget < 0) throw PreconditionError("negative knapsack budget");
  PathPacking packing;
  packing.value.assign(graph.colors(), 0);
  if (graph.num_nodes() == 0) return packing;
  // Budgets above the total finite weight behave like that total.
  std::int64_t total = 0;
  for (const auto& node : graph.nodes) {
    if (node.weight) {
      if (*node.weight < 0) throw PreconditionError("negative node weight");
      total += *node.weight;
    }
  }
  constexpr std::int64_t kMaxBudget = 1 << 20;
  if (std::min(budget, total) > kMaxBudget) {
    throw PreconditionError("knapsack budget too large for the path DP");
  }
  const int width = static_cast<int>(std::min(budget, total)) + 1;
  KnapsackForestDp dp(graph, width);
  for (int v : dp.endpoints()) {
    packing.paths.push_back(root_path(dp.parents(), v));
    packing.budget_used += *graph.nodes[v].weight;
  }
  packing.value = packing_value(graph, packing.paths);
  if (packing.value[0] != dp.value()) {
    throw InvariantViolation("knapsack path DP value does not match its endpoints");
  }
  if (packing.budget_used > budget) throw InvariantViolation("knapsack path DP over budget");
  return packing;
}

}  // namespace prioclust
