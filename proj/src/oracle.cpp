#include "prioclust/oracle.hpp"

#include <algorithm>
#include <functional>

#include "prioclust/errors.hpp"

namespace prioclust {

namespace {

// Worst required ratio for facility set `mask`: per color, the m_i-th
// smallest min_f d(v,f)/r_v. Empty optional when some color cannot be met.
std::optional<Rational> set_value(const Instance& inst,
                                  const std::vector<std::vector<Rational>>& ratio,
                                  std::uint32_t mask) {
  std::optional<Rational> worst;
  for (int color = 1; color <= inst.colors(); ++color) {
    const auto need = inst.requirements()[color - 1];
    if (need == 0) continue;
    if (mask == 0) return std::nullopt;
    std::vector<Rational> ratios;
    for (int v = 0; v < inst.num_clients(); ++v) {
      if (inst.color(v) != color) continue;
      std::optional<Rational> nearest;
      for (int f = 0; f < inst.num_facilities(); ++f) {
        if ((mask >> f & 1u) && (!nearest || ratio[v][f] < *nearest)) nearest = ratio[v][f];
      }
      ratios.push_back(*nearest);
    }
    std::nth_element(ratios.begin(), ratios.begin() + (need - 1), ratios.end());
    const Rational& value = ratios[need - 1];
    if (!worst || value > *worst) worst = value;
  }
  return worst;
}

}  // namespace

OracleResult brute_force_opt(const Instance& inst, OracleConstraint constraint) {
  constexpr int kMaxFacilities = 20;
  const int nf = inst.num_facilities();
  if (nf > kMaxFacilities) {
    throw GuardExceeded("oracle enumerates at most 20 facilities, instance has " +
                        std::to_string(nf));
  }
  std::vector<std::vector<Rational>> ratio(inst.num_clients(), std::vector<Rational>(nf));
  std::optional<Rational> smallest;
  for (int v = 0; v < inst.num_clients(); ++v) {
    for (int f = 0; f < nf; ++f) {
      ratio[v][f] = inst.client_facility_distance(v, f) / inst.radius(v);
      if (!smallest || ratio[v][f] < *smallest) smallest = ratio[v][f];
    }
  }
  OracleResult result;
  const bool trivial = std::all_of(inst.requirements().begin(), inst.requirements().end(),
                                   [](std::int64_t m) { return m == 0; });
  if (trivial) {
    result.optimal_alpha = *smallest;
    result.enumerated = 0;
    return result;
  }
  // Under a cardinality limit, adding facilities never hurts, so sets of
  // size exactly min(k, |F|) suffice.
  const int target = static_cast<int>(std::min<std::int64_t>(inst.k(), nf));
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << nf); ++mask) {
    if (constraint == OracleConstraint::kCardinality) {
      if (__builtin_popcount(mask) != target) continue;
    } else {
      std::int64_t weight = 0;
      for (int f = 0; f < nf; ++f) {
        if (mask >> f & 1u) weight += inst.facilities()[f].weight;
      }
      if (weight > inst.k()) continue;
    }
    ++result.enumerated;
    const auto value = set_value(inst, ratio, mask);
    if (value && (!best || *value < *best)) {
      best = value;
      result.witness.clear();
      for (int f = 0; f < nf; ++f) {
        if (mask >> f & 1u) result.witness.push_back(f);
      }
    }
  }
  if (!best) throw InfeasibleError("no facility set meets the coverage requirements");
  result.optimal_alpha = *best;
  return result;
}

namespace {

std::int64_t union_value(const ContactGraph& graph, const std::vector<char>& used) {
  std::int64_t total = 0;
  for (int v = 0; v < graph.num_nodes(); ++v) {
    if (used[v]) total += graph.nodes[v].lambda[0];
  }
  return total;
}

void collect_maximal_paths(const std::vector<std::vector<int>>& out, int v, std::vector<int>& path,
                           std::vector<std::vector<int>>& paths, std::size_t limit) {
  path.push_back(v);
  if (out[v].empty()) {
    if (paths.size() >= limit) throw GuardExceeded("too many maximal paths for path oracle");
    paths.push_back(path);
  }
  for (int w : out[v]) collect_maximal_paths(out, w, path, paths, limit);
  path.pop_back();
}

}  // namespace

std::int64_t brute_force_path_packing(const ContactGraph& graph, std::int64_t budget,
                                      PackingMode mode) {
  const int n = graph.num_nodes();
  if (n == 0 || budget < 0) return 0;
  std::int64_t best = 0;
  if (mode == PackingMode::kCount) {
    std::vector<std::vector<int>> out(n);
    std::vector<int> in_degree(n, 0);
    for (const auto& e : graph.edges) {
      out[e.from].push_back(e.to);
      ++in_degree[e.to];
    }
    std::vector<std::vector<int>> paths;
    constexpr std::size_t kMaxPaths = 4096;
    std::vector<int> scratch;
    for (int v = 0; v < n; ++v) {
      if (in_degree[v] == 0) collect_maximal_paths(out, v, scratch, paths, kMaxPaths);
    }
    // Lambdas are nonnegative, so sets of exactly min(budget, #paths) paths suffice.
    const int p = static_cast<int>(paths.size());
    const int take = static_cast<int>(std::min<std::int64_t>(budget, p));
    double combinations = 1;
    for (int j = 0; j < take; ++j) combinations = combinations * (p - j) / (j + 1);
    constexpr double kMaxCombinations = 2e7;
    if (combinations > kMaxCombinations) throw GuardExceeded("too many path sets for path oracle");
    std::vector<int> count(n, 0);
    std::int64_t value = 0;
    auto add = [&](int j, int delta) {
      for (int v : paths[j]) {
        if (delta > 0 && count[v]++ == 0) value += graph.nodes[v].lambda[0];
        if (delta < 0 && --count[v] == 0) value -= graph.nodes[v].lambda[0];
      }
    };
    std::function<void(int, int)> choose = [&](int from, int left) {
      if (left == 0) {
        best = std::max(best, value);
        return;
      }
      for (int j = from; j <= p - left; ++j) {
        add(j, 1);
        choose(j + 1, left - 1);
        add(j, -1);
      }
    };
    choose(0, take);
    return best;
  }

  std::vector<int> parent(n, -1);
  for (const auto& e : graph.edges) parent[e.to] = e.from;
  std::vector<int> selectable;
  for (int v = 0; v < n; ++v) {
    if (graph.nodes[v].weight) selectable.push_back(v);
  }
  constexpr std::size_t kMaxSelectable = 22;
  if (selectable.size() > kMaxSelectable) {
    throw GuardExceeded("too many weighted nodes for path oracle");
  }
  const int s = static_cast<int>(selectable.size());
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::int64_t cost = 0;
    std::vector<char> used(n, 0);
    for (int j = 0; j < s; ++j) {
      if (!(mask >> j & 1u)) continue;
      cost += *graph.nodes[selectable[j]].weight;
      for (int v = selectable[j]; v >= 0; v = parent[v]) used[v] = 1;
    }
    if (cost <= budget) best = std::max(best, union_value(graph, used));
  }
  return best;
}

}  // namespace prioclust
