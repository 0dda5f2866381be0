#pragma once

// Pieces shared by the solver translation units.

#include <string>
#include <vector>

#include "prioclust/contact.hpp"
#include "prioclust/decision.hpp"
#include "prioclust/instance.hpp"
#include "prioclust/pathpack.hpp"
#include "prioclust/solution.hpp"

namespace prioclust::detail {

/// Coverage LP point at the scaled radii. Throws InvariantViolation if the
/// LP is infeasible (the decision search only rounds at feasible alphas).
std::vector<Rational> coverage_point(const Instance& scaled, bool weighted);

/// Probe that accepts alpha iff the natural coverage LP is feasible.
ProbeFn coverage_lp_probe(bool weighted);

/// Smallest-index facility within r_v of client v, or -1.
int first_covering_facility(const Instance& inst, int client);

/// Union of the clusters of every node on the paths, sorted.
std::vector<int> path_members(const ContactGraph& graph,
                              const std::vector<std::vector<int>>& paths);

std::vector<int> path_clients(const ContactGraph& graph, const std::vector<int>& path);

/// Throws InvariantViolation unless `members` meets every requirement.
void check_requirements(const Instance& inst, const std::vector<int>& members,
                        const std::string& algorithm);

std::vector<Rational> distinct_radii(const Instance& inst);

void require_single_color(const Instance& inst, const std::string& algorithm);

}  // namespace prioclust::detail
