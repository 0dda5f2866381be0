#pragma once

#include <cstdint>
#include <vector>

#include "prioclust/contact.hpp"
#include "prioclust/instance.hpp"

namespace prioclust {

enum class OracleConstraint { kCardinality, kKnapsack };

struct OracleResult {
  Rational optimal_alpha;
  std::vector<int> witness;  // facility indices
  std::int64_t enumerated = 0;
};

/// Exact optimum by enumerating facility sets (|S| <= k, or total weight
/// <= k). Throws GuardExceeded above 20 facilities and InfeasibleError when
/// no set meets the requirements. With every requirement zero the result is
/// the smallest candidate alpha and an empty witness.
OracleResult brute_force_opt(const Instance& inst, OracleConstraint constraint);

enum class PackingMode { kCount, kWeight };

/// Exact path-packing optimum (first-color lambda). Count mode picks at most
/// `budget` maximal paths of a DAG; weight mode picks endpoint nodes of a
/// forest with total w' <= budget, each covering its root path.
std::int64_t brute_force_path_packing(const ContactGraph& graph, std::int64_t budget,
                                      PackingMode mode);

}  // namespace prioclust
