#pragma once

#include <functional>
#include <optional>

#include "prioclust/instance.hpp"
#include "prioclust/solution.hpp"

namespace prioclust {

enum class Verdict { kFeasible, kInfeasible, kUndecided };

/// Outcome of testing one alpha. A probe may already carry the rounded
/// solution (round-or-cut does); otherwise the rounding runs afterwards.
struct Probe {
  Verdict verdict = Verdict::kInfeasible;
  std::optional<Solution> solution;
};

using ProbeFn = std::function<Probe(const Instance& scaled, const Rational& alpha)>;
using RoundFn = std::function<Solution(const Instance& scaled, const Rational& alpha)>;

/// Binary search over candidate_alphas for the smallest alpha whose probe
/// is feasible, then one rounding there. Throws InfeasibleError when even the
/// largest candidate fails and UndecidedError when a probe is undecided.
Solution decision_search(const Instance& inst, const ProbeFn& probe, const RoundFn& round);

}  // namespace prioclust
