// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "prioclust/errors.hpp"
#include "prioclust/evaluate.hpp"
#include "prioclust/filtering.hpp"
#include "prioclust/generator.hpp"
#include "prioclust/oracle.hpp"
#include "prioclust/pathpack.hpp"
#include "prioclust/solution_io.hpp"
#include "prioclust/solvers.hpp"
#include "support.hpp"

using namespace prioclust;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int checked = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    if (!ok) fail(what());
  }
};

using Clock = std::chrono::steady_clock;

bool report(int number, const std::string& title, double limit_seconds,
            const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds > limit_seconds) {
    outcome.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  const bool pass = outcome.failures == 0;
  std::ostringstream line;
  line << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  ["
       << outcome.checked << " checks, " << outcome.failures << " failures, " << std::fixed;
  line.precision(2);
  line << seconds << " s]";
  if (!pass) line << "  first failure: " << outcome.first_failure;
  std::cout << line.str() << std::endl;
  return pass;
}

std::vector<int> all_clients(const Instance& inst) {
  std::vector<int> v(inst.num_clients());
  for (int i = 0; i < inst.num_clients(); ++i) v[i] = i;
  return v;
}

std::size_t distinct_radius_count(const Instance& inst) {
  std::set<Rational> radii;
  for (const auto& c : inst.clients()) radii.insert(c.radius);
  return radii.size();
}

// ---- criterion 1 -------------------------------------------------------

void check_filter(const Instance& inst, const std::vector<int>& input, const std::vector<Rational>& cov,
                  const Rational& slack, Outcome& out) {
  const ClusterFamily family = filter(inst, input, cov, slack);
  ++out.checked;
  std::multiset<int> seen;
  for (const auto& cluster : family.clusters) seen.insert(cluster.begin(), cluster.end());
  out.expect(seen == std::multiset<int>(input.begin(), input.end()), [] { return "clusters do not partition the input"; });
  const auto& reps = family.representatives;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      out.expect(inst.client_distance(reps[a], reps[b]) > inst.radius(reps[a]) + inst.radius(reps[b]) + slack,
                 [] { return "representatives too close"; });
    }
    for (int u : family.clusters[a]) {
      out.expect(inst.client_distance(u, reps[a]) <= inst.radius(u) + inst.radius(reps[a]) + slack,
                 [] { return "cluster member too far from its representative"; });
      out.expect(cov[reps[a]] >= cov[u], [] { return "member has larger cov than its representative"; });
    }
  }
}

Outcome filter_suite() {
  Outcome out;
  support::Rng rng(1001);
  for (int trial = 0; trial < 500; ++trial) {
    GeneratorConfig config;
    config.clients = static_cast<int>(rng.uniform(1, 30));
    config.facilities = static_cast<int>(rng.uniform(1, 6));
    config.shape = rng.coin() ? MetricShape::kGrid : MetricShape::kLine;
    config.coordinate_range = static_cast<int>(rng.uniform(5, 200));
    config.radius_set = {1, 2, 5, 17, 64};
    const Instance inst = generate_random(config, static_cast<std::uint64_t>(trial));
    std::vector<Rational> cov;
    for (int v = 0; v < inst.num_clients(); ++v) cov.push_back(rng.fraction(5));
    check_filter(inst, all_clients(inst), cov, 0, out);
    const auto plan = build_layer_plan(inst, all_clients(inst), 16, LayerMode::kAscending);
    for (int pos = 0; pos < plan.num_layers(); ++pos) {
      check_filter(inst, plan.layers[pos], cov, ascending_slack(plan, plan.order[pos]), out);
    }
  }
  return out;
}

// ---- solver criteria -----------------------------------------------------

struct SuiteCase {
  Instance inst;
  SolverOptions options;
};

// Runs `name` on `count` instances; checks coverage, budgets, evaluation
// agreement, lp alpha <= oracle alpha and the ratio bound against the oracle.
Outcome solver_suite(const std::string& name, int count, const std::function<std::optional<SuiteCase>(std::uint64_t)>& make,
                     const std::function<void(const SuiteCase&, const Solution&, Outcome&)>& extra = {}) {
  Outcome out;
  int done = 0;
  for (std::uint64_t seed = 0; done < count; ++seed) {
    if (seed > static_cast<std::uint64_t>(count) * 20) {
      out.fail("could not generate enough conforming instances");
      break;
    }
    const auto c = make(seed);
    if (!c) continue;
    const Instance& inst = c->inst;
    const auto constraint = uses_knapsack(name) ? OracleConstraint::kKnapsack : OracleConstraint::kCardinality;
    OracleResult oracle;
    try {
      oracle = brute_force_opt(inst, constraint);
    } catch (const InfeasibleError&) {
      continue;
    }
    ++done;
    ++out.checked;
    const std::string tag = name + " seed " + std::to_string(seed);
    Solution sol;
    try {
      sol = run_algorithm(name, inst, c->options);
    } catch (const std::exception& e) {
      out.fail(tag + ": " + e.what());
      continue;
    }
    const Bound bound = algorithm_bound(name, c->options);
    out.expect(within_bound(bound, sol.realized_ratio, oracle.optimal_alpha), [&] {
      return tag + ": ratio " + to_string(sol.realized_ratio) + " vs oracle " + to_string(oracle.optimal_alpha) +
             " bound " + bound.tag;
    });
    out.expect(sol.alpha <= oracle.optimal_alpha, [&] {
      return tag + ": lp alpha " + to_string(sol.alpha) + " above oracle " + to_string(oracle.optimal_alpha);
    });
    out.expect(sol.centers_used <= center_allowance(name, inst), [&] { return tag + ": too many centers"; });
    if (uses_knapsack(name)) out.expect(sol.weight_used <= inst.k(), [&] { return tag + ": over budget"; });
    for (int color = 0; color < inst.colors(); ++color) {
      out.expect(sol.covered_per_color[color] >= inst.requirements()[color],
                 [&] { return tag + ": color " + std::to_string(color + 1) + " under-covered"; });
    }
    const auto eval = evaluate_solution(inst, opened_ids(inst, sol), sol.realized_ratio);
    out.expect(eval.covered_per_color == sol.covered_per_color && eval.centers == sol.centers_used &&
                   eval.weight == sol.weight_used,
               [&] { return tag + ": independent evaluation disagrees"; });
    if (extra) extra(*c, sol, out);
  }
  return out;
}

GeneratorConfig sized_config(support::Rng& rng, std::vector<Rational> radii, int colors = 1) {
  GeneratorConfig config;
  config.clients = static_cast<int>(rng.uniform(6, 30));
  config.facilities = static_cast<int>(rng.uniform(2, 8));
  config.k = rng.uniform(1, 4);
  config.colors = colors;
  config.shape = rng.coin() ? MetricShape::kGrid : MetricShape::kLine;
  config.radius_set = std::move(radii);
  const Rational& largest = *std::max_element(config.radius_set.begin(), config.radius_set.end());
  config.coordinate_range = static_cast<int>(rng.uniform(1, 6)) *
                            static_cast<int>(mpz_class(largest.get_num() / largest.get_den()).get_si() + 1) * 3;
  config.requirement_fractions = {make_rational(rng.uniform(1, 9), 10)};
  return config;
}

SuiteCase plain(Instance inst) { return {std::move(inst), {}}; }

Outcome ksupplier_suite() {
  return solver_suite("ksupplier-outliers", 100, [](std::uint64_t seed) -> std::optional<SuiteCase> {
    support::Rng rng(seed + 2000);
    return plain(generate_random(sized_config(rng, {Rational(rng.uniform(1, 5))}), seed));
  });
}

Outcome pkso_suite() {
  return solver_suite("pkso", 200, [](std::uint64_t seed) -> std::optional<SuiteCase> {
    support::Rng rng(seed + 3000);
    const Instance inst = generate_random(sized_config(rng, {1, 2, 5, 30, 100}), seed);
    std::set<Rational> radii;
    for (const auto& c : inst.clients()) radii.insert(c.radius);
    if (*radii.rbegin() < 100 * *radii.begin()) return std::nullopt;  // keep two orders of magnitude
    return plain(inst);
  });
}

Outcome few_radii_suite() {
  Outcome total;
  auto merge = [&total](const Outcome& part) {
    total.checked += part.checked;
    if (part.failures > 0) {
      if (total.failures == 0) total.first_failure = part.first_failure;
      total.failures += part.failures;
    }
  };
  merge(solver_suite("pkso-2radii", 100, [](std::uint64_t seed) -> std::optional<SuiteCase> {
    support::Rng rng(seed + 4000);
    const Rational r0(rng.uniform(1, 5));
    const Rational r1 = r0 * make_rational(rng.uniform(11, 60), 10);
    const Instance inst = generate_random(sized_config(rng, {r0, r1}), seed);
    if (distinct_radius_count(inst) != 2) return std::nullopt;
    return plain(inst);
  }));
  // Half the three-radii instances sit in the regime r1/r0 = r2/r1 in [1.4, 1.6].
  merge(solver_suite(
      "pkso-3radii", 100,
      [](std::uint64_t seed) -> std::optional<SuiteCase> {
        support::Rng rng(seed + 5000);
        std::vector<Rational> radii;
        if (seed % 2 == 0) {
          const Rational q = make_rational(rng.uniform(140, 160), 100);
          radii = {100, 100 * q, 100 * q * q};
        } else {
          radii = {Rational(rng.uniform(1, 4)), Rational(rng.uniform(5, 20)), Rational(rng.uniform(21, 200))};
        }
        const Instance inst = generate_random(sized_config(rng, radii), seed);
        if (distinct_radius_count(inst) != 3) return std::nullopt;
        return plain(inst);
      },
      [](const SuiteCase& c, const Solution&, Outcome& out) {
        std::set<Rational> r;
        for (const auto& client : c.inst.clients()) r.insert(client.radius);
        const std::vector<Rational> v(r.begin(), r.end());
        out.expect(choose_three_radii_partition(v[0], v[1], v[2]).bound <= Rational(197, 50),
                   [] { return "three-radii partition bound above 3.94"; });
      }));
  merge(solver_suite("pkso-powers", 60, [](std::uint64_t seed) -> std::optional<SuiteCase> {
    support::Rng rng(seed + 6000);
    SuiteCase c = plain(generate_random(sized_config(rng, {1, 2, 4, 8, 16, 32}), seed));
    c.options.b = Rational(2);
    return c;
  }));
  return total;
}

// ---- path packing engines -------------------------------------------------

Outcome wkpp_suite() {
  Outcome out;
  support::Rng rng(7000);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = support::random_dag(rng, static_cast<int>(rng.uniform(1, 12)));
    const std::int64_t k = rng.uniform(0, 4);
    ++out.checked;
    const auto packing = solve_wkpp(g, k);
    const std::int64_t expected = brute_force_path_packing(g, k, PackingMode::kCount);
    out.expect(packing.value[0] == expected, [&] {
      return "dag " + std::to_string(trial) + ": flow " + std::to_string(packing.value[0]) + " vs brute force " +
             std::to_string(expected);
    });
    out.expect(packing.budget_used <= k, [&] { return "dag " + std::to_string(trial) + ": too many paths"; });
  }
  return out;
}

Outcome wknappp_suite() {
  Outcome out;
  support::Rng rng(8000);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = support::random_forest(rng, 12, 10);
    const std::int64_t budget = rng.uniform(0, 25);
    ++out.checked;
    const auto packing = solve_wknappp(g, budget);
    const std::int64_t expected = brute_force_path_packing(g, budget, PackingMode::kWeight);
    out.expect(packing.value[0] == expected, [&] {
      return "forest " + std::to_string(trial) + ": dp " + std::to_string(packing.value[0]) + " vs brute force " +
             std::to_string(expected);
    });
    out.expect(packing.budget_used <= budget, [&] { return "forest " + std::to_string(trial) + ": over budget"; });
  }
  return out;
}

Outcome pknapso_suite() {
  return solver_suite("pknapso", 100, [](std::uint64_t seed) -> std::optional<SuiteCase> {
    support::Rng rng(seed + 9000);
    GeneratorConfig config = sized_config(rng, {1, 3, 10});
    config.facilities = static_cast<int>(rng.uniform(2, 10));
    config.min_weight = rng.uniform(0, 2);
    config.max_weight = config.min_weight + rng.uniform(0, 5);
    config.k = rng.uniform(1, 12);
    return plain(generate_random(config, seed));
  });
}

Outcome pcks_suite() {
  Outcome out = solver_suite("pcks", 100, [](std::uint64_t seed) -> std::optional<SuiteCase> {
    support::Rng rng(seed + 10000);
    return plain(generate_random(sized_config(rng, {1, 4, 9}, seed % 2 ? 2 : 3), seed));
  });
  support::Rng rng(10500);
  int lps = 0;
  for (int trial = 0; lps < 200 && trial < 4000; ++trial) {
    const int colors = static_cast<int>(rng.uniform(2, 3));
    const auto g = support::random_forest(rng, 12, 5, colors);
    std::vector<std::int64_t> m(colors, 0);
    for (int c = 1; c < colors; ++c) {
      std::int64_t total = 0;
      for (const auto& node : g.nodes) total += node.lambda[c];
      m[c] = rng.uniform(0, total);
    }
    const std::int64_t k = rng.uniform(1, 4);
    const auto lp = build_wckpp_lp(g, m, k);
    const auto vertex = solve_wckpp(lp);
    if (vertex.status != lp::Status::kOptimal) continue;
    ++lps;
    ++out.checked;
    out.expect(static_cast<int>(vertex.fractional_leaves.size()) <= 2 * colors, [&] {
      return "forest LP " + std::to_string(trial) + ": " + std::to_string(vertex.fractional_leaves.size()) +
             " fractional leaves";
    });
    const auto packing = round_wckpp(vertex, lp, g);
    out.expect(packing.budget_used <= k + 2 * colors - 1,
               [&] { return "forest LP " + std::to_string(trial) + ": rounding used too many paths"; });
    for (int c = 1; c < colors; ++c) {
      out.expect(packing.value[c] >= m[c], [&] { return "forest LP " + std::to_string(trial) + ": demand missed"; });
    }
  }
  if (lps < 200) out.fail("only " + std::to_string(lps) + " feasible forest LPs");
  return out;
}

Outcome upcks_suite() {
  Outcome total;
  for (bool below : {true, false}) {
    const Outcome part = solver_suite("upcks2", 100, [below](std::uint64_t seed) -> std::optional<SuiteCase> {
      support::Rng rng(seed + (below ? 11000 : 12000));
      const Rational r1(rng.uniform(1, 10));
      const Rational r2 = below ? r1 * make_rational(rng.uniform(100, 161), 100) : r1 * make_rational(rng.uniform(162, 600), 100);
      if (within_golden_ratio(r1, r2) != below) return std::nullopt;
      GeneratorConfig config = sized_config(rng, {r1, r2}, 2);
      config.radius_per_color = true;
      const Instance inst = generate_random(config, seed);
      if (inst.color_size(1) == 0 || inst.color_size(2) == 0) return std::nullopt;
      return plain(inst);
    });
    total.checked += part.checked;
    if (part.failures > 0 && total.failures == 0) total.first_failure = part.first_failure;
    total.failures += part.failures;
  }
  return total;
}

// ---- LP kernel ---------------------------------------------------------------

Outcome lp_suite() {
  Outcome out;
  support::Rng rng(13000);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = support::random_lp(rng, static_cast<int>(rng.uniform(1, 6)), static_cast<int>(rng.uniform(1, 5)));
    ++out.checked;
    const auto solution = lp::solve(p);
    const auto expected = support::brute_force_lp_optimum(p);
    const std::string tag = "lp " + std::to_string(trial);
    if (solution.status != lp::Status::kOptimal) {
      out.expect(solution.status == lp::Status::kInfeasible && !expected,
                 [&] { return tag + ": solver reports no optimum but one exists"; });
      continue;
    }
    out.expect(lp::satisfies(p, solution.values), [&] { return tag + ": solution violates a constraint"; });
    out.expect(lp::rank_of_tight_set(p, solution) == p.num_variables(),
               [&] { return tag + ": tight set rank below variable count"; });
    if (p.sense() != lp::Sense::kFeasibility) {
      out.expect(expected && *expected == solution.objective_value, [&] {
        return tag + ": objective " + to_string(solution.objective_value) + " vs enumeration " +
               (expected ? to_string(*expected) : std::string("none"));
      });
    }
  }
  return out;
}

// ---- CLI determinism ---------------------------------------------------------

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome determinism_suite() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "prioclust_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = PRIOCLUST_CLI;
  // Runs `args` twice with --out into two files and compares bytes.
  auto twice = [&](const std::string& label, const std::string& args) {
    ++out.checked;
    std::string contents[2];
    for (int i = 0; i < 2; ++i) {
      const fs::path target = dir / (label + "." + std::to_string(i));
      const std::string command = cli + " " + args + " --out " + target.string() + " 2>/dev/null";
      const int status = std::system(command.c_str());
      if (status != 0) {
        out.fail(label + ": command exited with status " + std::to_string(status));
        return;
      }
      contents[i] = slurp(target);
    }
    out.expect(!contents[0].empty() && contents[0] == contents[1], [&] { return label + ": outputs differ"; });
  };
  struct Gen {
    std::string label, flags, algo;
  };
  const std::vector<Gen> gens{
      {"ksupplier", "--clients 14 --facilities 5 --k 2 --seed 3", "ksupplier-outliers"},
      {"pkso", "--clients 14 --facilities 5 --k 2 --radius-set 1,2,5,30,100 --seed 4", "pkso"},
      {"powers", "--clients 14 --facilities 5 --k 2 --radius-set 1,2,4,8 --seed 5", "pkso-powers --b 2"},
      {"two", "--clients 14 --facilities 5 --k 2 --radius-set 1,3 --seed 6", "pkso-2radii"},
      {"three", "--clients 14 --facilities 5 --k 2 --radius-set 1,3/2,9/4 --seed 7", "pkso-3radii"},
      {"knap", "--clients 14 --facilities 6 --k 5 --min-weight 1 --max-weight 3 --seed 8", "pknapso"},
      {"knapcut", "--clients 14 --facilities 6 --k 5 --min-weight 1 --max-weight 3 --seed 8",
       "pknapso --backend cutting-plane"},
      {"pcks", "--clients 14 --facilities 5 --k 2 --colors 3 --radius-set 1,4 --seed 9", "pcks"},
      {"upcks", "--clients 14 --facilities 5 --k 2 --colors 2 --radius-set 1,3 --radius-per-color --seed 10",
       "upcks2"},
  };
  for (const auto& g : gens) {
    twice("gen-" + g.label, "generate " + g.flags);
    const std::string input = (dir / ("gen-" + g.label + ".0")).string();
    twice("solve-" + g.label, "solve --algo " + g.algo + " --input " + input);
    twice("compare-" + g.label, "compare --algo " + g.algo + " --input " + input);
  }
  twice("oracle", "oracle --input " + (dir / "gen-pkso.0").string());
  twice("oracle-knapsack", "oracle --constraint knapsack --input " + (dir / "gen-knap.0").string());
  twice("batch", "compare --algo pkso --batch 5 --clients 10 --facilities 4 --radius-set 1,5,25 --seed 11");
  fs::remove_all(dir);
  return out;
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "filter invariants, 500 instance/cov pairs", 10, filter_suite);
  all &= report(2, "k-supplier with outliers within 3x oracle, 100 instances", 120, ksupplier_suite);
  all &= report(3, "pkso within (1+3sqrt3)x oracle, lp alpha <= oracle, 200 instances", 300, pkso_suite);
  all &= report(4, "two radii (3x), three radii (3.94x), powers of 2 (11/3x)", 180, few_radii_suite);
  all &= report(5, "WkPP flow equals brute force, 200 DAGs", 30, wkpp_suite);
  all &= report(6, "WKnapPP DP equals brute force, 200 forests", 30, wknappp_suite);
  all &= report(7, "pknapso explicit backend within 17x knapsack oracle, 100 instances", 300, pknapso_suite);
  all &= report(8, "pcks within 17x oracle with k+2c-1 centers; 200 forest LPs with <= 2c fractional leaves", 300,
                pcks_suite);
  all &= report(9, "upcks2 within (2+sqrt5)x oracle with k+1 centers, 100 per branch", 180, upcks_suite);
  all &= report(10, "LP kernel on 300 random problems", 60, lp_suite);
  all &= report(11, "CLI output byte-identical across reruns", 600, determinism_suite);
  return all ? 0 : 1;
}
