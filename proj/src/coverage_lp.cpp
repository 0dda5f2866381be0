#include "prioclust/coverage_lp.hpp"

namespace prioclust {

CoverageLp build_coverage_lp(const Instance& inst, bool weighted) {
  CoverageLp result;
  auto& lp = result.problem;
  for (int f = 0; f < inst.num_facilities(); ++f) {
    result.facility_variable.push_back(
        lp.add_variable("x_" + inst.facilities()[f].id, Rational(0), Rational(1)));
  }
  for (int v = 0; v < inst.num_clients(); ++v) {
    result.client_variable.push_back(
        lp.add_variable("cov_" + inst.clients()[v].id, Rational(0), Rational(1)));
  }
  for (int i = 1; i <= inst.colors(); ++i) {
    std::vector<lp::Term> row;
    for (int v = 0; v < inst.num_clients(); ++v) {
      if (inst.color(v) == i) row.push_back({result.client_variable[v], Rational(1)});
    }
    lp.add_constraint(std::move(row), lp::Relation::kGreaterEqual,
                      Rational(inst.requirements()[i - 1]));
  }
  std::vector<lp::Term> budget;
  for (int f = 0; f < inst.num_facilities(); ++f) {
    const Rational w = weighted ? Rational(inst.facilities()[f].weight) : Rational(1);
    if (sgn(w) != 0) budget.push_back({result.facility_variable[f], w});
  }
  lp.add_constraint(std::move(budget), lp::Relation::kLessEqual, Rational(inst.k()));
  for (int v = 0; v < inst.num_clients(); ++v) {
    std::vector<lp::Term> row{{result.client_variable[v], Rational(1)}};
    for (int f = 0; f < inst.num_facilities(); ++f) {
      if (inst.covers(f, v)) row.push_back({result.facility_variable[f], Rational(-1)});
    }
    lp.add_constraint(std::move(row), lp::Relation::kLessEqual, Rational(0));
  }
  return result;
}

std::optional<std::vector<Rational>> solve_coverage_lp(const Instance& inst, bool weighted) {
  const CoverageLp lp = build_coverage_lp(inst, weighted);
  const auto solution = lp::solve(lp.problem);
  if (solution.status != lp::Status::kOptimal) return std::nullopt;
  std::vector<Rational> cov;
  for (int v = 0; v < inst.num_clients(); ++v) cov.push_back(solution.values[lp.client_variable[v]]);
  return cov;
}

}  // namespace prioclust
