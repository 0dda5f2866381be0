#pragma once

// Builders, random generators and independent reference computations
// shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prioclust/contact.hpp"
#include "prioclust/instance.hpp"
#include "prioclust/lp.hpp"

namespace support {

using prioclust::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  /// Rational in [0, 1] with denominator `den`.
  Rational fraction(std::int64_t den) { return prioclust::make_rational(uniform(0, den), den); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// Instance on a line: clients at `client_x`, facilities at `facility_x`,
/// distance = coordinate difference. Ids c00.., f00.. so index order equals
/// id order.
inline std::string padded(const char* prefix, std::size_t i) {
  return prefix + std::string(i < 10 ? "0" : "") + std::to_string(i);
}

inline prioclust::Instance line_instance(const std::vector<std::int64_t>& client_x,
                                         const std::vector<Rational>& radii,
                                         const std::vector<std::int64_t>& facility_x,
                                         std::int64_t k, std::vector<std::int64_t> requirements,
                                         const std::vector<int>& colors = {},
                                         const std::vector<std::int64_t>& weights = {}) {
  std::vector<prioclust::Client> clients;
  std::vector<prioclust::Facility> facilities;
  std::vector<std::int64_t> x;
  for (std::size_t i = 0; i < client_x.size(); ++i) {
    clients.push_back({padded("c", i), colors.empty() ? 1 : colors[i], radii[i]});
    x.push_back(client_x[i]);
  }
  for (std::size_t i = 0; i < facility_x.size(); ++i) {
    facilities.push_back({padded("f", i), weights.empty() ? 1 : weights[i]});
    x.push_back(facility_x[i]);
  }
  std::vector<std::vector<Rational>> d(x.size(), std::vector<Rational>(x.size()));
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) d[a][b] = Rational(std::abs(x[a] - x[b]));
  }
  return prioclust::Instance::create(clients, facilities, d, k, std::move(requirements));
}

/// Random contact DAG: `n` nodes spread over layers, random downward edges.
inline prioclust::ContactGraph random_dag(Rng& rng, int n) {
  prioclust::ContactGraph g;
  g.kind = prioclust::GraphKind::kDag;
  const int layers = static_cast<int>(rng.uniform(1, 4));
  for (int v = 0; v < n; ++v) {
    prioclust::ContactNode node;
    node.client = v;
    node.lambda = {rng.uniform(0, 9)};
    g.nodes.push_back(node);
  }
  std::vector<int> position(n);
  for (auto& p : position) p = static_cast<int>(rng.uniform(0, layers - 1));
  std::sort(position.begin(), position.end());
  for (int v = 0; v < n; ++v) g.nodes[v].position = position[v];
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (position[u] > position[v] && rng.uniform(0, 2) == 0) g.edges.push_back({u, v, -1});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
  return g;
}

/// Random out-forest with at most `max_leaves` leaves; positions decrease
/// from roots to leaves. Node weights in [0, max_weight], some missing.
inline prioclust::ContactGraph random_forest(Rng& rng, int max_leaves, std::int64_t max_weight,
                                             int colors = 1) {
  prioclust::ContactGraph g;
  g.kind = prioclust::GraphKind::kForest;
  const int depth = static_cast<int>(rng.uniform(1, 4));
  // Build top-down: each node spawns children one layer lower.
  std::vector<int> parent;
  std::vector<int> level;
  const int roots = static_cast<int>(rng.uniform(1, 3));
  for (int r = 0; r < roots; ++r) {
    parent.push_back(-1);
    level.push_back(depth - 1);
  }
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (level[v] == 0) continue;
    const int kids = static_cast<int>(rng.uniform(0, 3));
    for (int c = 0; c < kids; ++c) {
      int leaves = 0;
      std::vector<char> has_child(parent.size(), 0);
      for (std::size_t u = 0; u < parent.size(); ++u) {
        if (parent[u] >= 0) has_child[parent[u]] = 1;
      }
      for (std::size_t u = 0; u < parent.size(); ++u) leaves += !has_child[u];
      if (leaves >= max_leaves) break;
      parent.push_back(static_cast<int>(v));
      level.push_back(level[v] - 1);
    }
  }
  // Number nodes by position (lowest layer first) as the library does.
  const int n = static_cast<int>(parent.size());
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return level[a] < level[b]; });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    prioclust::ContactNode node;
    node.client = i;
    node.position = level[order[i]];
    for (int c = 0; c < colors; ++c) node.lambda.push_back(rng.uniform(0, 6));
    if (rng.uniform(0, 5) != 0) node.weight = rng.uniform(0, max_weight);
    g.nodes.push_back(node);
  }
  for (int v = 0; v < n; ++v) {
    if (parent[v] >= 0) g.edges.push_back({rank[parent[v]], rank[v], -1});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
  return g;
}

/// Random LP with every variable boxed in [lower, lower + span].
inline prioclust::lp::Problem random_lp(Rng& rng, int vars, int rows) {
  namespace lp = prioclust::lp;
  lp::Problem p;
  for (int j = 0; j < vars; ++j) {
    const Rational lower(rng.uniform(-3, 2));
    p.add_variable("x" + std::to_string(j), lower, lower + rng.uniform(1, 5));
  }
  for (int i = 0; i < rows; ++i) {
    std::vector<lp::Term> terms;
    for (int j = 0; j < vars; ++j) {
      if (rng.uniform(0, 2) != 0) terms.push_back({j, prioclust::make_rational(rng.uniform(-4, 4), rng.uniform(1, 3))});
    }
    const std::int64_t roll = rng.uniform(0, 4);
    const lp::Relation rel = roll == 0   ? lp::Relation::kEqual
                             : roll <= 2 ? lp::Relation::kLessEqual
                                         : lp::Relation::kGreaterEqual;
    p.add_constraint(std::move(terms), rel, Rational(rng.uniform(-6, 8)));
  }
  std::vector<lp::Term> objective;
  for (int j = 0; j < vars; ++j) objective.push_back({j, Rational(rng.uniform(-5, 5))});
  p.set_objective(rng.coin() ? lp::Sense::kMaximize : lp::Sense::kMinimize, std::move(objective));
  return p;
}

/// Solves a square system exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Best objective over all basic feasible solutions, found by solving every
/// n-subset of the constraint and bound rows. nullopt when none exists.
/// Feasibility-mode problems score 0.
inline std::optional<Rational> brute_force_lp_optimum(const prioclust::lp::Problem& p) {
  namespace lp = prioclust::lp;
  const int n = p.num_variables();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : p.constraints()) {
    std::vector<Rational> row(n);
    for (const auto& t : c.terms) row[t.variable] += t.coefficient;
    rows.push_back(row);
    rhs.push_back(c.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> unit(n);
    unit[j] = 1;
    rows.push_back(unit);
    rhs.push_back(p.variables()[j].lower);
    if (p.variables()[j].upper) {
      rows.push_back(unit);
      rhs.push_back(*p.variables()[j].upper);
    }
  }
  const int m = static_cast<int>(rows.size());
  std::optional<Rational> best;
  if (n > m) return std::nullopt;
  // Enumerate n-combinations of the m rows.
  std::vector<char> mask(m, 0);
  std::fill(mask.begin(), mask.begin() + n, 1);
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i = 0; i < m; ++i) {
      if (mask[i]) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
    }
    auto x = solve_square(a, b);
    if (!x || !lp::satisfies(p, *x)) continue;
    Rational value;
    for (const auto& t : p.objective()) value += t.coefficient * (*x)[t.variable];
    if (p.sense() == lp::Sense::kFeasibility) value = 0;
    if (!best || (p.sense() == lp::Sense::kMinimize ? value < *best : value > *best)) best = value;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

}  // namespace support
