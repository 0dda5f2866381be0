#include "prioclust/lp.hpp"

#include <sstream>

#include "prioclust/errors.hpp"

namespace prioclust::lp {

int Problem::add_variable(std::string name, Rational lower, std::optional<Rational> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  return num_variables() - 1;
}

int Problem::add_constraint(std::vector<Term> terms, Relation relation, Rational rhs) {
  for (const auto& t : terms) {
    if (t.variable < 0 || t.variable >= num_variables()) {
      throw PreconditionError("constraint references undeclared variable " +
                              std::to_string(t.variable));
    }
  }
  constraints_.push_back({std::move(terms), relation, std::move(rhs)});
  return num_constraints() - 1;
}

void Problem::set_objective(Sense sense, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.variable < 0 || t.variable >= num_variables()) {
      throw PreconditionError("objective references undeclared variable");
    }
  }
  sense_ = sense;
  objective_ = std::move(terms);
}

std::string Problem::to_lp_text() const {
  std::ostringstream out;
  auto write_terms = [&](const std::vector<Term>& terms) {
    if (terms.empty()) out << "0";
    bool first = true;
    for (const auto& t : terms) {
      out << (first ? "" : " + ") << to_string(t.coefficient) << " "
          << variables_[t.variable].name;
      first = false;
    }
  };
  out << (sense_ == Sense::kMaximize   ? "maximize\n  "
          : sense_ == Sense::kMinimize ? "minimize\n  "
                                       : "feasibility\n  ");
  write_terms(objective_);
  out << "\nsubject to\n";
  for (int i = 0; i < num_constraints(); ++i) {
    const auto& c = constraints_[i];
    out << "  r" << i << ": ";
    write_terms(c.terms);
    out << (c.relation == Relation::kLessEqual   ? " <= "
            : c.relation == Relation::kEqual     ? " = "
                                                 : " >= ")
        << to_string(c.rhs) << "\n";
  }
  out << "bounds\n";
  for (const auto& v : variables_) {
    out << "  " << to_string(v.lower) << " <= " << v.name;
    if (v.upper) out << " <= " << to_string(*v.upper);
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<Rational> dense_row(const std::vector<Term>& terms, int n) {
  std::vector<Rational> row(n);
  for (const auto& t : terms) row[t.variable] += t.coefficient;
  return row;
}

Rational row_value(const std::vector<Term>& terms, const std::vector<Rational>& x) {
  Rational total;
  for (const auto& t : terms) total += t.coefficient * x[t.variable];
  return total;
}

class Tableau {
 public:
  explicit Tableau(const Problem& p) : n_(p.num_variables()) {
    struct Row {
      std::vector<Rational> a;
      Relation rel;
      Rational rhs;
    };
    std::vector<Row> rows;
    for (const auto& c : p.constraints()) {
      Row row{dense_row(c.terms, n_), c.relation, c.rhs};
      for (int j = 0; j < n_; ++j) {
        if (sgn(row.a[j]) != 0) row.rhs -= row.a[j] * p.variables()[j].lower;
      }
      rows.push_back(std::move(row));
    }
    for (int j = 0; j < n_; ++j) {
      const auto& v = p.variables()[j];
      if (!v.upper) continue;
      Row row{std::vector<Rational>(n_), Relation::kLessEqual, *v.upper - v.lower};
      row.a[j] = 1;
      rows.push_back(std::move(row));
    }
    for (auto& row : rows) {
      if (sgn(row.rhs) < 0) {
        for (auto& x : row.a) x = -x;
        row.rhs = -row.rhs;
        if (row.rel == Relation::kLessEqual) {
          row.rel = Relation::kGreaterEqual;
        } else if (row.rel == Relation::kGreaterEqual) {
          row.rel = Relation::kLessEqual;
        }
      }
    }

    int slacks = 0;
    int artificials = 0;
    for (const auto& row : rows) {
      if (row.rel != Relation::kEqual) ++slacks;
      if (row.rel != Relation::kLessEqual) ++artificials;
    }
    first_artificial_ = n_ + slacks;
    columns_ = first_artificial_ + artificials;
    const int m = static_cast<int>(rows.size());
    t_.assign(m, std::vector<Rational>(columns_ + 1));
    basis_.assign(m, -1);
    int next_slack = n_;
    int next_art = first_artificial_;
    for (int i = 0; i < m; ++i) {
      auto& row = rows[i];
      for (int j = 0; j < n_; ++j) t_[i][j] = std::move(row.a[j]);
      t_[i][columns_] = std::move(row.rhs);
      switch (row.rel) {
        case Relation::kLessEqual:
          t_[i][next_slack] = 1;
          basis_[i] = next_slack++;
          break;
        case Relation::kGreaterEqual:
          t_[i][next_slack++] = -1;
          t_[i][next_art] = 1;
          basis_[i] = next_art++;
          break;
        case Relation::kEqual:
          t_[i][next_art] = 1;
          basis_[i] = next_art++;
          break;
      }
    }
  }

  /// Phase 1. Returns false if the problem is infeasible.
  bool find_feasible_basis() {
    if (first_artificial_ == columns_) return true;
    obj_.assign(columns_ + 1, Rational());
    for (int j = first_artificial_; j < columns_; ++j) obj_[j] = -1;
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] >= first_artificial_) add_row_to_objective(i, Rational(1));
    }
    run(columns_);
    // obj_[rhs] holds -z with z = -sum(artificials).
    if (sgn(obj_[columns_]) != 0) return false;

    std::vector<int> redundant;
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] < first_artificial_) continue;
      int entering = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          entering = j;
          break;
        }
      }
      if (entering >= 0) {
        pivot(i, entering);
      } else {
        redundant.push_back(i);
      }
    }
    for (auto it = redundant.rbegin(); it != redundant.rend(); ++it) {
      t_.erase(t_.begin() + *it);
      basis_.erase(basis_.begin() + *it);
    }
    for (auto& row : t_) {
      row[first_artificial_] = std::move(row[columns_]);
      row.resize(first_artificial_ + 1);
    }
    columns_ = first_artificial_;
    return true;
  }

  /// Phase 2 for maximize cost·x'. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost) {
    obj_.assign(columns_ + 1, Rational());
    for (int j = 0; j < n_; ++j) obj_[j] = cost[j];
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] < n_ && sgn(cost[basis_[i]]) != 0) add_row_to_objective(i, -cost[basis_[i]]);
    }
    return run(columns_);
  }

  std::vector<Rational> shifted_values() const {
    std::vector<Rational> x(n_);
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_[i][columns_];
    }
    return x;
  }

 private:
  int rows() const { return static_cast<int>(t_.size()); }

  void add_row_to_objective(int i, const Rational& factor) {
    for (int j = 0; j <= columns_; ++j) {
      if (sgn(t_[i][j]) != 0) obj_[j] += factor * t_[i][j];
    }
  }

  // Bland's rule over columns [0, limit).
  bool run(int limit) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < limit; ++j) {
        if (sgn(obj_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < rows(); ++i) {
        if (sgn(t_[i][entering]) <= 0) continue;
        Rational ratio = t_[i][columns_] / t_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(int r, int c) {
    const Rational inv = 1 / t_[r][c];
    nonzero_.clear();
    for (int j = 0; j <= columns_; ++j) {
      if (sgn(t_[r][j]) != 0) {
        t_[r][j] *= inv;
        nonzero_.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[c]) == 0) return;
      const Rational factor = row[c];
      for (int j : nonzero_) row[j] -= factor * t_[r][j];
    };
    for (int i = 0; i < rows(); ++i) {
      if (i != r) eliminate(t_[i]);
    }
    if (!obj_.empty()) eliminate(obj_);
    basis_[r] = c;
  }

  int n_;
  int first_artificial_ = 0;
  int columns_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  std::vector<Rational> obj_;
  std::vector<int> nonzero_;
};

}  // namespace

VertexSolution solve(const Problem& problem) {
  if (problem.num_variables() == 0) throw PreconditionError("LP has no variables");
  VertexSolution result;
  Tableau tableau(problem);
  if (!tableau.find_feasible_basis()) {
    result.status = Status::kInfeasible;
    return result;
  }
  const int n = problem.num_variables();
  if (problem.sense() != Sense::kFeasibility) {
    std::vector<Rational> cost = dense_row(problem.objective(), n);
    if (problem.sense() == Sense::kMinimize) {
      for (auto& c : cost) c = -c;
    }
    if (!tableau.optimize(cost)) {
      result.status = Status::kUnbounded;
      return result;
    }
  }
  result.status = Status::kOptimal;
  result.values = tableau.shifted_values();
  for (int j = 0; j < n; ++j) result.values[j] += problem.variables()[j].lower;
  result.objective_value = row_value(problem.objective(), result.values);

  for (int i = 0; i < problem.num_constraints(); ++i) {
    const auto& c = problem.constraints()[i];
    if (row_value(c.terms, result.values) == c.rhs) {
      result.tight_set.push_back({TightEntry::Kind::kConstraint, i});
    }
  }
  for (int j = 0; j < n; ++j) {
    const auto& v = problem.variables()[j];
    if (result.values[j] == v.lower) result.tight_set.push_back({TightEntry::Kind::kLowerBound, j});
    if (v.upper && result.values[j] == *v.upper) {
      result.tight_set.push_back({TightEntry::Kind::kUpperBound, j});
    }
  }
  if (!satisfies(problem, result.values)) {
    throw InvariantViolation("simplex returned a point violating the LP");
  }
  return result;
}

bool satisfies(const Problem& problem, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != problem.num_variables()) return false;
  for (int j = 0; j < problem.num_variables(); ++j) {
    const auto& v = problem.variables()[j];
    if (values[j] < v.lower || (v.upper && values[j] > *v.upper)) return false;
  }
  for (const auto& c : problem.constraints()) {
    const Rational lhs = row_value(c.terms, values);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (sgn(rows[i][col]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      const Rational factor = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

int rank_of_tight_set(const Problem& problem, const VertexSolution& solution) {
  const int n = problem.num_variables();
  std::vector<std::vector<Rational>> rows;
  for (const auto& entry : solution.tight_set) {
    if (entry.kind == TightEntry::Kind::kConstraint) {
      rows.push_back(dense_row(problem.constraints()[entry.index].terms, n));
    } else {
      std::vector<Rational> unit(n);
      unit[entry.index] = 1;
      rows.push_back(std::move(unit));
    }
  }
  return matrix_rank(std::move(rows));
}

}  // namespace prioclust::lp
