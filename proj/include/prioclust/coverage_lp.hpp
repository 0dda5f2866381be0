#pragma once

#include <optional>
#include <vector>

#include "prioclust/instance.hpp"
#include "prioclust/lp.hpp"

namespace prioclust {

/// Natural coverage relaxation at the instance's current radii:
/// x_f, cov_v in [0,1]; sum over C_i of cov >= m_i for every color;
/// budget row sum x_f <= k (or sum w_f x_f <= k when `weighted`);
/// cov_v <= sum of x_f over facilities within r_v.
struct CoverageLp {
  lp::Problem problem;
  std::vector<int> facility_variable;
  std::vector<int> client_variable;
};

CoverageLp build_coverage_lp(const Instance& inst, bool weighted);

/// Solves the relaxation and returns cov per client, or nullopt if infeasible.
std::optional<std::vector<Rational>> solve_coverage_lp(const Instance& inst, bool weighted);

}  // namespace prioclust
