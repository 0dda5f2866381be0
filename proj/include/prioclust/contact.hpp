#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prioclust/filtering.hpp"
#include "prioclust/instance.hpp"

namespace prioclust {

struct ContactNode {
  int client = -1;     // representative client index
  int position = 0;    // layer position
  std::vector<int> members;              // D(v)
  std::vector<std::int64_t> lambda;      // lambda[i] = |D(v) ∩ C_{i+1}|
  std::optional<std::int64_t> weight;    // cheapest facility within r_v; nullopt when none
};

struct ContactEdge {
  int from = -1;
  int to = -1;
  int witness = -1;  // facility covering both endpoints, or -1 for distance-rule edges
};

enum class GraphKind { kDag, kForest };

/// Contact graph over layer representatives. Nodes are numbered by layer
/// position, then by selection order inside the layer.
struct ContactGraph {
  GraphKind kind = GraphKind::kDag;
  std::vector<ContactNode> nodes;
  std::vector<ContactEdge> edges;  // sorted by (from, to)

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int colors() const { return nodes.empty() ? 0 : static_cast<int>(nodes.front().lambda.size()); }
  std::vector<std::vector<int>> successors() const;
  /// Forest only: parent node or -1.
  std::vector<int> parents() const;
  const ContactEdge* find_edge(int from, int to) const;
  /// One line per node, then one line per edge.
  std::string to_text(const Instance& inst) const;
};

/// Edge u -> v (u at a higher position) whenever one facility covers both
/// within their radii; the witness is the smallest such facility.
ContactGraph build_contact_dag(const Instance& inst, const LayerPlan& plan,
                               const std::vector<ClusterFamily>& families);

/// Distance-rule edges u -> v when d(u,v) <= r_u + r_v + slack of v's layer,
/// minus every edge (u,v) for which v is also reachable from u through an
/// intermediate node. Throws InvariantViolation if a node keeps two parents.
ContactGraph build_contact_forest(const Instance& inst, const LayerPlan& plan,
                                  const std::vector<ClusterFamily>& families);

/// Reinterprets a DAG as an out-forest; throws InvariantViolation if some
/// node has two parents.
ContactGraph forest_from_dag(ContactGraph dag);

/// Where to open a facility for one path.
struct PathOpening {
  bool is_edge = false;
  int from = -1;  // edge tail, or the designated node
  int to = -1;    // edge head (edges only)
};

/// The consecutive pair straddling `middle` (tail at position >= middle, head
/// below it). Paths entirely at or above the middle designate their last
/// node, paths entirely below it their first node.
PathOpening middle_edge_of_path(const ContactGraph& graph, const std::vector<int>& path,
                                int middle);

}  // namespace prioclust
