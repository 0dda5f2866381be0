#pragma once

#include <vector>

#include "prioclust/instance.hpp"

namespace prioclust {

/// Representatives and their clusters from one filter pass.
struct ClusterFamily {
  std::vector<int> representatives;        // client indices, selection order
  std::vector<std::vector<int>> clusters;  // clusters[j] belongs to representatives[j]; sorted
  Rational slack;
};

/// Greedy filter: repeatedly take the remaining client with the largest
/// `cov` (smallest index on ties) and give it every remaining client u with
/// d(u, v) <= r_u + r_v + slack. `cov` is indexed by client.
/// Radii are read from `inst`.
ClusterFamily filter(const Instance& inst, const std::vector<int>& clients,
                     const std::vector<Rational>& cov, const Rational& slack);

enum class LayerMode { kAlternating, kAscending };

/// Clients grouped into layers. Layer positions are 0-based; a contact edge
/// always runs from a higher position to a lower one.
struct LayerPlan {
  Rational base_squared;
  Rational unit;                           // smallest radius of the instance
  std::vector<std::vector<int>> classes;   // classes[i - 1] holds radius class i
  std::vector<int> order;                  // order[pos] = 1-based class index at that position
  std::vector<std::vector<int>> layers;    // layers[pos] = clients at that position
  int middle = 0;

  int num_layers() const { return static_cast<int>(layers.size()); }
};

/// Radius class of a client: the 1-based i with base^(i-1) <= r/unit < base^i,
/// decided on squares so irrational bases need not be represented.
int radius_class(const Rational& radius, const Rational& unit, const Rational& base_squared);

/// Layers the given clients by radius class. Alternating mode places the
/// classes on two sides of the smallest one (largest first); ascending mode
/// puts class 1 at position 0, class 2 at position 1, and so on.
LayerPlan build_layer_plan(const Instance& inst, const std::vector<int>& clients,
                           const Rational& base_squared, LayerMode mode);

/// A plan with explicitly given layers (used by the two- and three-radii solvers).
LayerPlan custom_layer_plan(const Instance& inst, std::vector<std::vector<int>> layers,
                            int middle);

/// Slack unit * 4^i used for ascending base-4 layer i (1-based class index).
Rational ascending_slack(const LayerPlan& plan, int class_index);

}  // namespace prioclust
