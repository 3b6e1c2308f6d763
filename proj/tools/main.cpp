// Command line harness: run the optimizers, enumerate small networks
// exhaustively, or compare MADS against random search over many seeds.
//
// Exit codes: 0 success, 2 invalid arguments or inputs, 3 evaluator or
// simulation failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "feedermads/compare_runs.hpp"
#include "feedermads/enumerate.hpp"
#include "feedermads/errors.hpp"
#include "feedermads/evaluator.hpp"
#include "feedermads/network_io.hpp"
#include "feedermads/optimizer.hpp"
#include "feedermads/trace_io.hpp"

namespace {

using namespace feedermads;

struct CliOptions {
  std::string network_path;
  std::string algo = "mads";
  int budget = 1000;
  std::uint64_t seed = 0;
  std::string poll_order = "lex";
  std::string incumbent = "round-robin";
  bool mesh_adaptive = false;
  std::string trace_path;
  std::string frontier_path;
  std::vector<std::uint64_t> seeds;
};

PollOrder parse_poll_order(const std::string& name) {
  return name == "random" ? PollOrder::SeededRandom : PollOrder::Lexicographic;
}

IncumbentPolicy parse_incumbent(const std::string& name) {
  return name == "feas-first" ? IncumbentPolicy::FeasibilityFirst
                              : IncumbentPolicy::RoundRobin;
}

// The h=0 frontier member, if the run found any feasible configuration.
std::optional<const FrontierEntry*> best_feasible(const FrontierFilter& f) {
  for (const FrontierEntry& e : f.entries()) {
    if (e.m.is_feasible()) return &e;
  }
  return std::nullopt;
}

void print_summary(const FrontierFilter& frontier, int evaluations,
                   std::optional<StopReason> stop) {
  std::cout << "evaluations=" << evaluations
            << " frontier=" << frontier.size();
  if (auto entry = best_feasible(frontier)) {
    std::cout << " best_feasible_f_kw=" << format_double((*entry)->m.loss_kw);
  }
  if (stop.has_value()) {
    std::cout << " stop="
              << (*stop == StopReason::Budget ? "budget" : "exhaustion");
  }
  std::cout << "\n";
}

int do_run(const CliOptions& opt) {
  const NetworkModel network = load_network(opt.network_path);
  OptimizerConfig config;
  config.n = network.switchable.size();
  config.budget = opt.budget;
  config.seed = opt.seed;
  config.poll_order = parse_poll_order(opt.poll_order);
  config.incumbent_policy = parse_incumbent(opt.incumbent);
  config.mesh_adaptive = opt.mesh_adaptive;

  const Evaluator evaluator = make_evaluator(network);
  const RunResult result = opt.algo == "mads"
                               ? run_mads(config, evaluator)
                               : run_random_search(config, evaluator);

  if (!opt.trace_path.empty()) {
    write_trace_csv(result.trace, result.skips, opt.trace_path);
  }
  if (!opt.frontier_path.empty()) {
    write_frontier_json(result.frontier, opt.frontier_path);
  }
  print_summary(result.frontier, result.evaluations_used, result.stop_reason);
  return 0;
}

int do_enumerate(const CliOptions& opt) {
  const NetworkModel network = load_network(opt.network_path);
  const EnumerationResult result = enumerate_all(network);

  if (!opt.trace_path.empty()) {
    write_trace_csv(result.trace, {}, opt.trace_path);
  }
  if (!opt.frontier_path.empty()) {
    write_frontier_json(result.frontier, opt.frontier_path);
  }
  print_summary(result.frontier, static_cast<int>(result.trace.size()),
                std::nullopt);
  return 0;
}

int do_compare(const CliOptions& opt) {
  const NetworkModel network = load_network(opt.network_path);
  CompareOptions options;
  options.poll_order = parse_poll_order(opt.poll_order);
  options.incumbent_policy = parse_incumbent(opt.incumbent);
  options.mesh_adaptive = opt.mesh_adaptive;
  const ComparisonReport report =
      compare_runs(network, opt.budget, opt.seeds, options);
  std::cout << format_comparison_json(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-objective feeder reconfiguration by mesh adaptive direct search"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* run = app.add_subcommand("run", "Run one optimizer on a network");
  run->add_option("--network", opt.network_path, "Network JSON file")
      ->required();
  run->add_option("--algo", opt.algo, "Algorithm")
      ->check(CLI::IsMember({"mads", "random"}));
  run->add_option("--budget", opt.budget, "Evaluation budget")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", opt.seed, "Random seed");
  run->add_option("--poll-order", opt.poll_order, "Poll ordering")
      ->check(CLI::IsMember({"lex", "random"}));
  run->add_option("--incumbent", opt.incumbent, "Incumbent policy")
      ->check(CLI::IsMember({"round-robin", "feas-first"}));
  run->add_flag("--mesh-adaptive", opt.mesh_adaptive,
                "Widen the poll radius after failed polls (extension)");
  run->add_option("--trace", opt.trace_path, "Write the evaluation trace CSV");
  run->add_option("--frontier", opt.frontier_path, "Write the frontier JSON");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Evaluate every configuration (n <= 20)");
  enumerate->add_option("--network", opt.network_path, "Network JSON file")
      ->required();
  enumerate->add_option("--trace", opt.trace_path,
                        "Write the full evaluation CSV");
  enumerate->add_option("--frontier", opt.frontier_path,
                        "Write the exact frontier JSON");

  CLI::App* compare = app.add_subcommand(
      "compare", "MADS versus random search at equal budget");
  compare->add_option("--network", opt.network_path, "Network JSON file")
      ->required();
  compare->add_option("--budget", opt.budget, "Evaluation budget per run")
      ->check(CLI::PositiveNumber);
  compare->add_option("--seeds", opt.seeds, "Seeds, comma separated")
      ->required()
      ->delimiter(',');
  compare->add_option("--poll-order", opt.poll_order, "Poll ordering")
      ->check(CLI::IsMember({"lex", "random"}));
  compare->add_option("--incumbent", opt.incumbent, "Incumbent policy")
      ->check(CLI::IsMember({"round-robin", "feas-first"}));
  compare->add_flag("--mesh-adaptive", opt.mesh_adaptive,
                    "Widen the poll radius after failed polls (extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return do_run(opt);
    if (enumerate->parsed()) return do_enumerate(opt);
    return do_compare(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EvaluationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
