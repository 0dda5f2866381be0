#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prioclust/instance.hpp"

namespace prioclust {

/// One opening decision: the representatives on a path, the facility opened
/// for it, and the rule that picked the facility.
struct TraceEntry {
  std::vector<int> path;  // representative client indices
  int facility = -1;
  std::string rule;
};

struct Solution {
  std::string algorithm;
  Rational alpha;                    // threshold at which the rounding ran
  std::vector<int> opened;           // sorted facility indices
  Rational realized_ratio;           // max d(v, opened) / r_v over certified clients
  std::vector<std::int64_t> covered_per_color;
  std::int64_t centers_used = 0;
  std::int64_t weight_used = 0;
  std::vector<TraceEntry> trace;
};

/// Fills opened/realized_ratio/coverage/centers/weight from the trace.
/// `certified` lists the clients the rounding guarantees; the realized ratio
/// is their worst d(v, opened)/r_v under the original radii, and coverage
/// counts every client within that ratio.
void finalize_solution(const Instance& original, const std::vector<int>& certified,
                       Solution& solution);

/// Approximation guarantee attached to an algorithm.
struct Bound {
  enum class Kind { kRational, kOnePlusThreeSqrt3, kTwoPlusSqrt5 };
  std::string tag;
  Kind kind = Kind::kRational;
  Rational value;  // kRational only
};

/// ratio <= bound * alpha, decided exactly.
bool within_bound(const Bound& bound, const Rational& ratio, const Rational& alpha);

}  // namespace prioclust
