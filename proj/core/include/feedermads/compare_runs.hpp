/**
 * @file compare_runs.hpp
 * @brief MADS versus random search at matched budget over many seeds.
 *
 * For each seed both algorithms run with the same evaluation budget on the
 * same network. Per seed the report captures best feasible loss (h = 0),
 * evaluations to the first feasible candidate, total evaluations, and
 * frontier size; medians summarize across seeds. "Never found feasible" is
 * carried as infinity and survives the median arithmetic.
 */

#ifndef FEEDERMADS_COMPARE_RUNS_HPP
#define FEEDERMADS_COMPARE_RUNS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "feedermads/network_model.hpp"
#include "feedermads/optimizer.hpp"
#include "feedermads/power_flow.hpp"

namespace feedermads {

/// One algorithm's outcome on one seed.
struct AlgorithmOutcome {
  double best_feasible_f_kw = 0.0;  ///< min f over h=0 evaluations; inf if none
  double first_feasible_eval = 0.0; ///< count of evaluations spent when the
                                    ///< first h=0 candidate appeared; inf if none
  int evaluations = 0;
  int frontier_size = 0;
};

struct SeedComparison {
  std::uint64_t seed = 0;
  AlgorithmOutcome mads;
  AlgorithmOutcome random;
};

/// Across-seed medians of the per-seed fields (even counts average the
/// middle pair, so integer fields can land on halves).
struct MedianSummary {
  double best_feasible_f_kw = 0.0;
  double first_feasible_eval = 0.0;
  double evaluations = 0.0;
  double frontier_size = 0.0;
};

struct ComparisonReport {
  int budget = 0;
  std::vector<SeedComparison> seeds;
  MedianSummary mads_median;
  MedianSummary random_median;
};

/// Options shared by both runs of every seed.
struct CompareOptions {
  PollOrder poll_order = PollOrder::Lexicographic;
  IncumbentPolicy incumbent_policy = IncumbentPolicy::RoundRobin;
  bool mesh_adaptive = false;
};

/**
 * @brief Runs both algorithms on every seed and aggregates.
 *
 * Throws ConfigError when budget < 1 or the seed list is empty.
 */
ComparisonReport compare_runs(const NetworkModel& network, int budget,
                              const std::vector<std::uint64_t>& seeds,
                              const CompareOptions& options = {});

/// Same comparison against an arbitrary n-dimensional evaluator.
ComparisonReport compare_runs(std::size_t n, const Evaluator& evaluator,
                              int budget,
                              const std::vector<std::uint64_t>& seeds,
                              const CompareOptions& options = {});

/// Machine-readable report; infinities appear as the string "inf".
std::string format_comparison_json(const ComparisonReport& report);

}  // namespace feedermads

#endif  // FEEDERMADS_COMPARE_RUNS_HPP
