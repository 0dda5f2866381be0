#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prioclust/instance.hpp"
#include "prioclust/solution.hpp"

namespace prioclust {

/// Uniform-radius k-supplier with outliers: the k largest filter clusters.
Solution solve_ksupplier_outliers(const Instance& inst);

/// Priority k-supplier with outliers, layers of ratio sqrt(3) placed
/// alternately around the smallest class.
Solution solve_pkso(const Instance& inst);

/// As solve_pkso when every radius is r_min times an exact power of b > 1.
Solution solve_pkso_powers_of_b(const Instance& inst, const Rational& b);

/// Exactly two distinct radii.
Solution solve_pkso_two_radii(const Instance& inst);

/// Exactly three distinct radii r0 < r1 < r2.
Solution solve_pkso_three_radii(const Instance& inst);

enum class KnapsackBackend { kExplicit, kCuttingPlane };

/// Knapsack-constrained variant: facility weights, total weight <= k.
/// The explicit backend enumerates every affordable facility set (at most
/// 15 facilities); the cutting-plane backend stops after `cut_cap` cuts per
/// alpha and then throws UndecidedError.
Solution solve_pknapso(const Instance& inst, KnapsackBackend backend = KnapsackBackend::kExplicit,
                       int cut_cap = 500);

/// Colorful variant, any number of colors; may open up to k + 2c - 1 centers.
Solution solve_pcks(const Instance& inst);

/// Two colors, one radius per color; may open up to k + 1 centers.
Solution solve_upcks_two_colors(const Instance& inst);

/// Which of the three layerings the three-radii solver uses, and its bound.
struct ThreeRadiiChoice {
  char partition = 'a';  // 'a' three layers, 'b' top two merged, 'c' bottom two merged
  Rational bound;
};
ThreeRadiiChoice choose_three_radii_partition(const Rational& r0, const Rational& r1,
                                              const Rational& r2);

/// (3b^2 - 1) / (b^2 - 1).
Rational powers_of_b_bound(const Rational& b);

/// True iff r_large <= r_small * (1 + sqrt 5) / 2, decided on squares.
bool within_golden_ratio(const Rational& r_small, const Rational& r_large);

struct SolverOptions {
  std::optional<Rational> b;  // pkso-powers
  KnapsackBackend backend = KnapsackBackend::kExplicit;
  int cut_cap = 500;
};

/// CLI names: ksupplier-outliers, pkso, pkso-powers, pkso-2radii,
/// pkso-3radii, pknapso, pcks, upcks2.
const std::vector<std::string>& algorithm_names();

Solution run_algorithm(const std::string& name, const Instance& inst,
                       const SolverOptions& options = {});

/// Approximation guarantee of the named algorithm.
Bound algorithm_bound(const std::string& name, const SolverOptions& options = {});

/// Largest number of centers the named algorithm may open on `inst`.
std::int64_t center_allowance(const std::string& name, const Instance& inst);

/// Whether the oracle should enumerate by total weight instead of count.
bool uses_knapsack(const std::string& name);

}  // namespace prioclust
