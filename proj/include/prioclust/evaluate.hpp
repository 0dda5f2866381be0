#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prioclust/instance.hpp"

namespace prioclust {

struct Evaluation {
  std::vector<std::int64_t> covered_per_color;  // clients with d(v, S) <= threshold * r_v
  Rational max_covered_ratio;                   // max d(v, S)/r_v over those clients (0 if none)
  std::int64_t centers = 0;
  std::int64_t weight = 0;
};

/// Recomputes coverage of an opened facility set from scratch. Throws
/// ValidationError for an unknown or repeated facility id.
Evaluation evaluate_solution(const Instance& inst, const std::vector<std::string>& opened,
                             const Rational& threshold);

}  // namespace prioclust
