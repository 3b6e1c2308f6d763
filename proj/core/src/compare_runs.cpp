#include "feedermads/compare_runs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "feedermads/errors.hpp"
#include "feedermads/evaluator.hpp"

namespace feedermads {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

AlgorithmOutcome summarize(const RunResult& run) {
  AlgorithmOutcome outcome;
  outcome.evaluations = run.evaluations_used;
  outcome.frontier_size = static_cast<int>(run.frontier.size());
  outcome.best_feasible_f_kw = kInf;
  outcome.first_feasible_eval = kInf;
  int evals = 0;
  for (const TraceRecord& r : run.trace) {
    ++evals;
    if (r.metrics.is_feasible()) {
      if (std::isinf(outcome.first_feasible_eval)) {
        outcome.first_feasible_eval = evals;
      }
      outcome.best_feasible_f_kw =
          std::min(outcome.best_feasible_f_kw, r.metrics.loss_kw);
    }
  }
  return outcome;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

MedianSummary medians(const std::vector<SeedComparison>& seeds,
                      AlgorithmOutcome SeedComparison::*side) {
  std::vector<double> best, first, evals, fronts;
  for (const SeedComparison& s : seeds) {
    const AlgorithmOutcome& o = s.*side;
    best.push_back(o.best_feasible_f_kw);
    first.push_back(o.first_feasible_eval);
    evals.push_back(o.evaluations);
    fronts.push_back(o.frontier_size);
  }
  MedianSummary m;
  m.best_feasible_f_kw = median(std::move(best));
  m.first_feasible_eval = median(std::move(first));
  m.evaluations = median(std::move(evals));
  m.frontier_size = median(std::move(fronts));
  return m;
}

nlohmann::ordered_json json_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

nlohmann::ordered_json outcome_json(const AlgorithmOutcome& o) {
  return nlohmann::ordered_json{
      {"best_feasible_f_kw", json_value(o.best_feasible_f_kw)},
      {"first_feasible_eval", json_value(o.first_feasible_eval)},
      {"evaluations", o.evaluations},
      {"frontier_size", o.frontier_size}};
}

nlohmann::ordered_json median_json(const MedianSummary& m) {
  return nlohmann::ordered_json{
      {"best_feasible_f_kw", json_value(m.best_feasible_f_kw)},
      {"first_feasible_eval", json_value(m.first_feasible_eval)},
      {"evaluations", json_value(m.evaluations)},
      {"frontier_size", json_value(m.frontier_size)}};
}

}  // namespace

ComparisonReport compare_runs(const NetworkModel& network, int budget,
                              const std::vector<std::uint64_t>& seeds,
                              const CompareOptions& options) {
  validate_network(network);
  return compare_runs(network.switchable.size(), make_evaluator(network),
                      budget, seeds, options);
}

ComparisonReport compare_runs(std::size_t n, const Evaluator& evaluator,
                              int budget,
                              const std::vector<std::uint64_t>& seeds,
                              const CompareOptions& options) {
  if (budget < 1) {
    throw ConfigError("comparison needs budget >= 1, got " +
                      std::to_string(budget));
  }
  if (seeds.empty()) {
    throw ConfigError("comparison needs at least one seed");
  }

  ComparisonReport report;
  report.budget = budget;
  for (std::uint64_t seed : seeds) {
    OptimizerConfig config;
    config.n = n;
    config.budget = budget;
    config.seed = seed;
    config.poll_order = options.poll_order;
    config.incumbent_policy = options.incumbent_policy;
    config.mesh_adaptive = options.mesh_adaptive;

    SeedComparison comparison;
    comparison.seed = seed;
    comparison.mads = summarize(run_mads(config, evaluator));
    comparison.random = summarize(run_random_search(config, evaluator));
    report.seeds.push_back(comparison);
  }
  report.mads_median = medians(report.seeds, &SeedComparison::mads);
  report.random_median = medians(report.seeds, &SeedComparison::random);
  return report;
}

std::string format_comparison_json(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["budget"] = report.budget;
  j["seeds"] = nlohmann::ordered_json::array();
  for (const SeedComparison& s : report.seeds) {
    j["seeds"].push_back(nlohmann::ordered_json{
        {"seed", s.seed},
        {"mads", outcome_json(s.mads)},
        {"random", outcome_json(s.random)}});
  }
  j["median"] = {{"mads", median_json(report.mads_median)},
                 {"random", median_json(report.random_median)}};
  return j.dump(2) + "\n";
}

}  // namespace feedermads
