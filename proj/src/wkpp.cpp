#include <algorithm>
#include <limits>
#include <optional>

#include "prioclust/errors.hpp"
#include "prioclust/pathpack.hpp"

namespace prioclust {

std::vector<std::int64_t> packing_value(const ContactGraph& graph,
                                        const std::vector<std::vector<int>>& paths) {
  std::vector<char> used(graph.nodes.size(), 0);
  for (const auto& path : paths) {
    for (int v : path) used[v] = 1;
  }
  std::vector<std::int64_t> value(graph.colors(), 0);
  for (int v = 0; v < graph.num_nodes(); ++v) {
    if (!used[v]) continue;
    for (int i = 0; i < graph.colors(); ++i) value[i] += graph.nodes[v].lambda[i];
  }
  return value;
}

namespace {

struct Arc {
  int to;
  std::int64_t capacity;
  std::int64_t cost;
  int reverse;
  bool forward;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adjacency_(nodes) {}

  int add_arc(int from, int to, std::int64_t capacity, std::int64_t cost) {
    adjacency_[from].push_back(
        {to, capacity, cost, static_cast<int>(adjacency_[to].size()), true});
    adjacency_[to].push_back(
        {from, 0, -cost, static_cast<int>(adjacency_[from].size()) - 1, false});
    return static_cast<int>(adjacency_[from].size()) - 1;
  }

  // Bellman-Ford over the residual network; returns the cost of the
  // cheapest s-t path and pushes one unit along it, or nullopt if t is
  // unreachable.
  std::optional<std::int64_t> augment_one(int s, int t, bool only_if_negative) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    const int n = static_cast<int>(adjacency_.size());
    std::vector<std::int64_t> dist(n, kInf);
    std::vector<std::pair<int, int>> via(n, {-1, -1});
    dist[s] = 0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int u = 0; u < n; ++u) {
        if (dist[u] == kInf) continue;
        for (int i = 0; i < static_cast<int>(adjacency_[u].size()); ++i) {
          const Arc& a = adjacency_[u][i];
          if (a.capacity > 0 && dist[u] + a.cost < dist[a.to]) {
            dist[a.to] = dist[u] + a.cost;
            via[a.to] = {u, i};
            changed = true;
          }
        }
      }
      if (!changed) break;
      if (round == n - 1) throw InvariantViolation("negative cycle in residual flow network");
    }
    if (dist[t] == kInf) return std::nullopt;
    if (only_if_negative && dist[t] >= 0) return dist[t];
    for (int v = t; v != s; v = via[v].first) {
      Arc& a = adjacency_[via[v].first][via[v].second];
      a.capacity -= 1;
      adjacency_[v][a.reverse].capacity += 1;
    }
    return dist[t];
  }

  const std::vector<Arc>& arcs(int node) const { return adjacency_[node]; }
  std::vector<Arc>& arcs(int node) { return adjacency_[node]; }

 private:
  std::vector<std::vector<Arc>> adjacency_;
};

}  // namespace

PathPacking solve_wkpp(const ContactGraph& graph, std::int64_t k) {
  if (graph.kind != GraphKind::kDag) throw PreconditionError("WkPP expects a contact DAG");
  if (k < 0) throw PreconditionError("negative path budget");
  PathPacking packing;
  packing.value.assign(graph.colors(), 0);
  const int n = graph.num_nodes();
  if (k == 0 || n == 0) return packing;

  // Node layout: s = 0, t = 1, v_in = 2 + 2v, v_out = 3 + 2v.
  const std::int64_t paths = std::min<std::int64_t>(k, n);
  const std::int64_t unbounded = paths;
  FlowNetwork network(2 * n + 2);
  auto in = [](int v) { return 2 + 2 * v; };
  auto out = [](int v) { return 3 + 2 * v; };
  std::vector<int> unit_arc(n);
  std::vector<int> free_arc(n);
  for (int v = 0; v < n; ++v) {
    unit_arc[v] = network.add_arc(in(v), out(v), 1, -graph.nodes[v].lambda[0]);
    free_arc[v] = network.add_arc(in(v), out(v), unbounded, 0);
    network.add_arc(0, in(v), unbounded, 0);
    network.add_arc(out(v), 1, unbounded, 0);
  }
  for (const auto& e : graph.edges) network.add_arc(out(e.from), in(e.to), unbounded, 0);

  for (std::int64_t unit = 0; unit < paths; ++unit) {
    auto cost = network.augment_one(0, 1, /*only_if_negative=*/true);
    if (!cost || *cost >= 0) break;
  }

  // Flow on a forward arc is the residual capacity of its reverse arc.
  auto flow_on = [&](int from, int index) {
    const Arc& a = network.arcs(from)[index];
    return network.arcs(a.to)[a.reverse].capacity;
  };
  auto consume = [&](int from, int index) {
    Arc& a = network.arcs(from)[index];
    network.arcs(a.to)[a.reverse].capacity -= 1;
  };
  auto carries = [&](int from, int index) {
    return network.arcs(from)[index].forward && flow_on(from, index) > 0;
  };

  // Peel paths: enter at the smallest-id node with flow from s, then keep
  // moving to the smallest-id successor carrying flow; leave to t last.
  for (;;) {
    int entry = -1;
    int entry_arc = -1;
    for (int i = 0; i < static_cast<int>(network.arcs(0).size()); ++i) {
      if (carries(0, i)) {
        const int v = (network.arcs(0)[i].to - 2) / 2;
        if (entry < 0 || v < entry) {
          entry = v;
          entry_arc = i;
        }
      }
    }
    if (entry < 0) break;
    consume(0, entry_arc);
    std::vector<int> path;
    int v = entry;
    for (;;) {
      path.push_back(v);
      if (flow_on(in(v), unit_arc[v]) > 0) {
        consume(in(v), unit_arc[v]);
      } else if (flow_on(in(v), free_arc[v]) > 0) {
        consume(in(v), free_arc[v]);
      } else {
        throw InvariantViolation("flow conservation broken inside split node");
      }
      int next = -1;
      int next_arc = -1;
      int sink_arc = -1;
      for (int i = 0; i < static_cast<int>(network.arcs(out(v)).size()); ++i) {
        if (!carries(out(v), i)) continue;
        const int to = network.arcs(out(v))[i].to;
        if (to == 1) {
          sink_arc = i;
        } else {
          const int w = (to - 2) / 2;
          if (next < 0 || w < next) {
            next = w;
            next_arc = i;
          }
        }
      }
      if (next >= 0) {
        consume(out(v), next_arc);
        v = next;
      } else if (sink_arc >= 0) {
        consume(out(v), sink_arc);
        break;
      } else {
        throw InvariantViolation("flow conservation broken at node exit");
      }
    }
    packing.paths.push_back(std::move(path));
  }
  packing.budget_used = static_cast<std::int64_t>(packing.paths.size());
  if (packing.budget_used > k) throw InvariantViolation("WkPP used more than k paths");
  packing.value = packing_value(graph, packing.paths);
  return packing;
}

}  // namespace prioclust
