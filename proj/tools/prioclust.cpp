#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "prioclust/errors.hpp"
#include "prioclust/generator.hpp"
#include "prioclust/instance_io.hpp"
#include "prioclust/oracle.hpp"
#include "prioclust/solution_io.hpp"
#include "prioclust/solvers.hpp"

using nlohmann::json;
using namespace prioclust;

namespace {

constexpr int kExitSolution = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUndecided = 3;

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      values.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(flag + ": " + e.what());
    }
  }
  if (values.empty()) throw ParseError(flag + ": expected a comma-separated list of rationals");
  return values;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_instance(in);
}

struct GeneratorFlags {
  int clients = 10;
  int facilities = 3;
  int colors = 1;
  std::int64_t k = 2;
  std::string shape = "line";
  int range = 20;
  std::string radius_set = "1";
  bool radius_per_color = false;
  std::string requirements = "1/2";
  std::int64_t min_weight = 1;
  std::int64_t max_weight = 1;
  std::uint64_t seed = 1;

  void attach(CLI::App* app) {
    app->add_option("--clients", clients, "Number of clients")->check(CLI::PositiveNumber);
    app->add_option("--facilities", facilities, "Number of facilities")->check(CLI::PositiveNumber);
    app->add_option("--colors", colors, "Number of colors")->check(CLI::PositiveNumber);
    app->add_option("--k", k, "Center count or knapsack budget")->check(CLI::NonNegativeNumber);
    app->add_option("--shape", shape, "Metric: line or grid")->check(CLI::IsMember({"line", "grid"}));
    app->add_option("--range", range, "Coordinates drawn from [0, range]")->check(CLI::NonNegativeNumber);
    app->add_option("--radius-set", radius_set, "Comma-separated radii, e.g. 1,2,5/2");
    app->add_flag("--radius-per-color", radius_per_color,
                  "Give every client of color i the i-th radius of the set");
    app->add_option("--requirements", requirements,
                    "Comma-separated coverage fractions per color (one entry is broadcast)");
    app->add_option("--min-weight", min_weight, "Smallest facility weight")->check(CLI::NonNegativeNumber);
    app->add_option("--max-weight", max_weight, "Largest facility weight")->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed, "Random seed");
  }

  GeneratorConfig config() const {
    GeneratorConfig c;
    c.clients = clients;
    c.facilities = facilities;
    c.colors = colors;
    c.k = k;
    c.shape = shape == "grid" ? MetricShape::kGrid : MetricShape::kLine;
    c.coordinate_range = range;
    c.radius_set = parse_rational_list(radius_set, "--radius-set");
    c.radius_per_color = radius_per_color;
    c.requirement_fractions = parse_rational_list(requirements, "--requirements");
    c.min_weight = min_weight;
    c.max_weight = max_weight;
    return c;
  }
};

struct SolveFlags {
  std::string algo;
  std::string b;
  std::string backend = "explicit";
  int cut_cap = 500;

  void attach(CLI::App* app) {
    app->add_option("--algo", algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember(algorithm_names()));
    app->add_option("--b", b, "Ratio between radius classes (pkso-powers), e.g. 2 or 3/2");
    app->add_option("--backend", backend, "pknapso backend: explicit or cutting-plane")
        ->check(CLI::IsMember({"explicit", "cutting-plane"}));
    app->add_option("--cut-cap", cut_cap, "pknapso cutting-plane cuts per alpha")
        ->check(CLI::NonNegativeNumber);
  }

  SolverOptions options() const {
    SolverOptions o;
    if (!b.empty()) o.b = parse_rational(b);
    o.backend = backend == "cutting-plane" ? KnapsackBackend::kCuttingPlane : KnapsackBackend::kExplicit;
    o.cut_cap = cut_cap;
    return o;
  }
};

json oracle_json(const Instance& inst, const OracleResult& result) {
  json witness = json::array();
  for (int f : result.witness) witness.push_back(inst.facilities()[f].id);
  return {{"optimal_alpha", rational_to_json(result.optimal_alpha)},
          {"witness", witness},
          {"enumerated", result.enumerated}};
}

// One compare run: solver, oracle, and the exact bound check. Solver
// failures with a status of their own are reported instead of aborting.
json compare_run(const Instance& inst, const SolveFlags& flags) {
  const SolverOptions options = flags.options();
  json report;
  report["instance_digest"] = instance_digest(inst);
  report["algorithm"] = flags.algo;
  const auto constraint =
      uses_knapsack(flags.algo) ? OracleConstraint::kKnapsack : OracleConstraint::kCardinality;
  const Bound bound = algorithm_bound(flags.algo, options);
  try {
    const Solution solution = run_algorithm(flags.algo, inst, options);
    const OracleResult oracle = brute_force_opt(inst, constraint);
    report["status"] = "solved";
    report["solution"] = solution_to_json(inst, solution);
    report["oracle"] = oracle_json(inst, oracle);
    const bool pass = within_bound(bound, solution.realized_ratio, oracle.optimal_alpha) &&
                      solution.centers_used <= center_allowance(flags.algo, inst) &&
                      (!uses_knapsack(flags.algo) || solution.weight_used <= inst.k());
    report["certified_bound"] = {{"tag", bound.tag}, {"pass", pass}};
  } catch (const InfeasibleError& e) {
    report["status"] = "infeasible";
    report["message"] = e.what();
    report["certified_bound"] = {{"tag", bound.tag}, {"pass", true}};
  } catch (const UndecidedError& e) {
    report["status"] = "undecided";
    report["message"] = e.what();
    report["certified_bound"] = {{"tag", bound.tag}, {"pass", false}};
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Priority clustering with outliers: solvers, oracle, and bound checks"};
  app.require_subcommand(1);

  GeneratorFlags gen_flags;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  gen_flags.attach(generate);
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  SolveFlags solve_flags;
  std::string solve_input;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Run one solver on an instance");
  solve_flags.attach(solve);
  solve->add_option("--input", solve_input, "Instance file")->required();
  solve->add_option("--out", solve_out, "Solution file (default stdout)");

  std::string oracle_input;
  std::string oracle_out;
  std::string oracle_constraint = "cardinality";
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration");
  oracle->add_option("--input", oracle_input, "Instance file")->required();
  oracle->add_option("--constraint", oracle_constraint, "cardinality or knapsack")
      ->check(CLI::IsMember({"cardinality", "knapsack"}));
  oracle->add_option("--out", oracle_out, "Result file (default stdout)");

  SolveFlags compare_flags;
  GeneratorFlags compare_gen;
  std::string compare_input;
  std::string compare_out;
  int batch = 0;
  auto* compare = app.add_subcommand("compare", "Solver against oracle with bound certification");
  compare_flags.attach(compare);
  compare_gen.attach(compare);
  auto* input_opt = compare->add_option("--input", compare_input, "Instance file");
  auto* batch_opt = compare->add_option("--batch", batch, "Generate this many instances from --seed on")
                        ->check(CLI::PositiveNumber);
  input_opt->excludes(batch_opt);
  compare->add_option("--out", compare_out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a usage error.
    return app.exit(e) == 0 ? kExitSolution : kExitUsage;
  }

  try {
    if (generate->parsed()) {
      write_output(gen_out, dump_instance(generate_random(gen_flags.config(), gen_flags.seed)));
      return kExitSolution;
    }
    if (solve->parsed()) {
      const Instance inst = read_instance(solve_input);
      const Solution solution = run_algorithm(solve_flags.algo, inst, solve_flags.options());
      write_output(solve_out, solution_to_json(inst, solution).dump(1) + "\n");
      return kExitSolution;
    }
    if (oracle->parsed()) {
      const Instance inst = read_instance(oracle_input);
      const auto constraint = oracle_constraint == "knapsack" ? OracleConstraint::kKnapsack
                                                              : OracleConstraint::kCardinality;
      write_output(oracle_out, oracle_json(inst, brute_force_opt(inst, constraint)).dump(1) + "\n");
      return kExitSolution;
    }
    if (compare->parsed()) {
      if (compare_input.empty() == (batch == 0)) {
        throw ParseError("compare needs exactly one of --input and --batch");
      }
      json report;
      if (!compare_input.empty()) {
        report = compare_run(read_instance(compare_input), compare_flags);
      } else {
        const GeneratorConfig config = compare_gen.config();
        json runs = json::array();
        int passed = 0;
        for (int i = 0; i < batch; ++i) {
          const std::uint64_t seed = compare_gen.seed + static_cast<std::uint64_t>(i);
          json run = compare_run(generate_random(config, seed), compare_flags);
          run["seed"] = seed;
          if (run["certified_bound"]["pass"].get<bool>()) ++passed;
          runs.push_back(std::move(run));
        }
        report = {{"algorithm", compare_flags.algo},
                  {"runs", runs},
                  {"passed", passed},
                  {"failed", batch - passed}};
      }
      write_output(compare_out, report.dump(1) + "\n");
      return kExitSolution;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
