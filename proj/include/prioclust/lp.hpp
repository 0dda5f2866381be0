#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prioclust/rational.hpp"

namespace prioclust::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize, kFeasibility };

struct Variable {
  std::string name;
  Rational lower;                 // finite; every LP here is box- or sign-constrained
  std::optional<Rational> upper;  // nullopt = unbounded above
};

struct Term {
  int variable;
  Rational coefficient;
};

struct Constraint {
  std::vector<Term> terms;  // sparse row; repeated variables are summed
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

/// A linear program over exact rationals.
class Problem {
 public:
  int add_variable(std::string name, Rational lower, std::optional<Rational> upper);
  int add_constraint(std::vector<Term> terms, Relation relation, Rational rhs);
  void set_objective(Sense sense, std::vector<Term> terms);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  Sense sense() const { return sense_; }
  const std::vector<Term>& objective() const { return objective_; }

  /// Human-readable LP text dump for debugging.
  std::string to_lp_text() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  Sense sense_ = Sense::kFeasibility;
  std::vector<Term> objective_;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

/// One member of the tight set: a constraint row, or a variable bound.
struct TightEntry {
  enum class Kind { kConstraint, kLowerBound, kUpperBound };
  Kind kind;
  int index;  // constraint index or variable index

  friend bool operator==(const TightEntry&, const TightEntry&) = default;
};

struct VertexSolution {
  Status status = Status::kInfeasible;
  std::vector<Rational> values;  // per variable; empty unless optimal
  std::vector<TightEntry> tight_set;
  Rational objective_value;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule. Returns
/// a basic feasible solution, i.e. a vertex of the feasible region. In
/// feasibility mode the objective is zero and the first feasible basis
/// found is returned.
VertexSolution solve(const Problem& problem);

/// Rank over the rationals of the rows in `solution.tight_set`
/// (constraint rows and unit rows for tight bounds).
int rank_of_tight_set(const Problem& problem, const VertexSolution& solution);

/// Exact substitution check of every constraint and bound.
bool satisfies(const Problem& problem, const std::vector<Rational>& values);

/// Rank of a rational matrix by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace prioclust::lp
