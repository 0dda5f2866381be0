#include "prioclust/decision.hpp"

#include <map>

#include "prioclust/errors.hpp"

namespace prioclust {

Solution decision_search(const Instance& inst, const ProbeFn& probe, const RoundFn& round) {
  const auto candidates = candidate_alphas(inst);
  std::map<std::size_t, Probe> seen;
  auto test = [&](std::size_t index) -> const Probe& {
    auto it = seen.find(index);
    if (it != seen.end()) return it->second;
    const Rational& alpha = candidates[index];
    Probe result = probe(inst.with_scaled_radii(alpha), alpha);
    if (result.verdict == Verdict::kUndecided) {
      throw UndecidedError("could not decide feasibility at alpha " + to_string(alpha));
    }
    return seen.emplace(index, std::move(result)).first->second;
  };

  std::size_t hi = candidates.size() - 1;
  if (test(hi).verdict != Verdict::kFeasible) {
    throw InfeasibleError("coverage requirements cannot be met at any alpha");
  }
  std::size_t lo = 0;  // smallest index not yet ruled out
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (test(mid).verdict == Verdict::kFeasible) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Rational& alpha = candidates[hi];
  const Probe& chosen = test(hi);
  Solution solution = chosen.solution ? *chosen.solution : round(inst.with_scaled_radii(alpha), alpha);
  solution.alpha = alpha;
  return solution;
}

}  // namespace prioclust
