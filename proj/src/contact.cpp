#include "prioclust/contact.hpp"

#include <algorithm>
#include <sstream>

#include "prioclust/errors.hpp"

namespace prioclust {

std::vector<std::vector<int>> ContactGraph::successors() const {
  std::vector<std::vector<int>> out(nodes.size());
  for (const auto& e : edges) out[e.from].push_back(e.to);
  return out;
}

std::vector<int> ContactGraph::parents() const {
  std::vector<int> parent(nodes.size(), -1);
  for (const auto& e : edges) {
    if (parent[e.to] >= 0) throw InvariantViolation("contact forest node has two parents");
    parent[e.to] = e.from;
  }
  return parent;
}

const ContactEdge* ContactGraph::find_edge(int from, int to) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{from, to},
                             [](const ContactEdge& e, const std::pair<int, int>& key) {
                               return std::pair{e.from, e.to} < key;
                             });
  if (it == edges.end() || it->from != from || it->to != to) return nullptr;
  return &*it;
}

std::string ContactGraph::to_text(const Instance& inst) const {
  std::ostringstream out;
  out << (kind == GraphKind::kDag ? "dag" : "forest") << " " << nodes.size() << " "
      << edges.size() << "\n";
  for (int v = 0; v < num_nodes(); ++v) {
    const auto& node = nodes[v];
    out << "node " << v << " " << inst.point_id(node.client) << " layer " << node.position
        << " lambda";
    for (auto l : node.lambda) out << " " << l;
    out << "\n";
  }
  for (const auto& e : edges) {
    out << "edge " << e.from << " " << e.to;
    if (e.witness >= 0) out << " " << inst.facilities()[e.witness].id;
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<ContactNode> make_nodes(const Instance& inst, const LayerPlan& plan,
                                    const std::vector<ClusterFamily>& families) {
  if (static_cast<int>(families.size()) != plan.num_layers()) {
    throw PreconditionError("one cluster family per layer required");
  }
  std::vector<ContactNode> nodes;
  for (int pos = 0; pos < plan.num_layers(); ++pos) {
    const auto& family = families[pos];
    for (std::size_t j = 0; j < family.representatives.size(); ++j) {
      ContactNode node;
      node.client = family.representatives[j];
      node.position = pos;
      node.members = family.clusters[j];
      node.lambda.assign(inst.colors(), 0);
      for (int u : node.members) ++node.lambda[inst.color(u) - 1];
      for (int f = 0; f < inst.num_facilities(); ++f) {
        if (!inst.covers(f, node.client)) continue;
        const auto w = inst.facilities()[f].weight;
        if (!node.weight || w < *node.weight) node.weight = w;
      }
      nodes.push_back(std::move(node));
    }
  }
  return nodes;
}

void sort_edges(std::vector<ContactEdge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const ContactEdge& a, const ContactEdge& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
}

}  // namespace

ContactGraph build_contact_dag(const Instance& inst, const LayerPlan& plan,
                               const std::vector<ClusterFamily>& families) {
  ContactGraph graph;
  graph.kind = GraphKind::kDag;
  graph.nodes = make_nodes(inst, plan, families);
  const int n = graph.num_nodes();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (graph.nodes[u].position <= graph.nodes[v].position) continue;
      for (int f = 0; f < inst.num_facilities(); ++f) {
        if (inst.covers(f, graph.nodes[u].client) && inst.covers(f, graph.nodes[v].client)) {
          graph.edges.push_back({u, v, f});
          break;
        }
      }
    }
  }
  sort_edges(graph.edges);
  return graph;
}

ContactGraph build_contact_forest(const Instance& inst, const LayerPlan& plan,
                                  const std::vector<ClusterFamily>& families) {
  ContactGraph graph;
  graph.kind = GraphKind::kForest;
  graph.nodes = make_nodes(inst, plan, families);
  const int n = graph.num_nodes();
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const auto& a = graph.nodes[u];
      const auto& b = graph.nodes[v];
      if (a.position <= b.position) continue;
      if (inst.client_distance(a.client, b.client) <=
          inst.radius(a.client) + inst.radius(b.client) + families[b.position].slack) {
        adjacent[u][v] = 1;
      }
    }
  }
  // reach[u][v]: v reachable from u by >= 1 edges. Nodes are numbered by
  // position and edges point downward, so increasing index is a valid order.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (!adjacent[u][w]) continue;
      reach[u][w] = 1;
      for (int v = 0; v < n; ++v) {
        if (reach[w][v]) reach[u][v] = 1;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!adjacent[u][v]) continue;
      bool forward = false;
      for (int w = 0; w < n && !forward; ++w) {
        forward = adjacent[u][w] && reach[w][v];
      }
      if (!forward) graph.edges.push_back({u, v, -1});
    }
  }
  sort_edges(graph.edges);
  graph.parents();  // throws on in-degree > 1
  return graph;
}

ContactGraph forest_from_dag(ContactGraph dag) {
  dag.kind = GraphKind::kForest;
  dag.parents();
  return dag;
}

PathOpening middle_edge_of_path(const ContactGraph& graph, const std::vector<int>& path,
                                int middle) {
  if (path.empty()) throw PreconditionError("empty path");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (graph.nodes[path[i]].position >= middle && graph.nodes[path[i + 1]].position < middle) {
      return {true, path[i], path[i + 1]};
    }
  }
  if (graph.nodes[path.front()].position >= middle) return {false, path.back(), -1};
  return {false, path.front(), -1};
}

}  // namespace prioclust
