/**
 * @file optimizer.hpp
 * @brief The MADS loop over {0,1}^n and the random-search baseline.
 *
 * Each step selects an incumbent from the frontier filter, polls its
 * neighborhood in a deterministic order, and offers every valid point to the
 * filter, breaking early on the first accepted candidate. An incumbent whose
 * full poll set fails is marked exhaustively polled; the run terminates when
 * the budget runs out or every frontier member is exhausted.
 *
 * Runs are bit-deterministic given (config, evaluator). The trace records
 * every evaluation in order; out-of-domain poll points are logged separately
 * as skips and never consume budget. Both record kinds draw sequence numbers
 * from one shared counter so a merged, interleaved log can be reconstructed.
 */

#ifndef FEEDERMADS_OPTIMIZER_HPP
#define FEEDERMADS_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "feedermads/errors.hpp"
#include "feedermads/frontier_filter.hpp"
#include "feedermads/metrics.hpp"
#include "feedermads/poll.hpp"
#include "feedermads/switch_vector.hpp"

namespace feedermads {

/// Black-box evaluation boundary: must be pure and total on {0,1}^n.
using Evaluator = std::function<Metrics(const SwitchVector&)>;

/// Incumbent choice when several frontier members await polling.
enum class IncumbentPolicy {
  RoundRobin,        ///< lowest-id entry not yet exhaustively polled
  FeasibilityFirst,  ///< minimal h, then minimal f, then lowest id
};

/// Why a finished run stopped.
enum class StopReason {
  Budget,      ///< evaluation budget consumed
  Exhaustion,  ///< every frontier member exhaustively polled, no improvement
};

/// What a single mads_step did.
enum class StepOutcome {
  Improved,            ///< a poll point modified the filter (early break)
  RadiusExpanded,      ///< full poll failed; adaptive mode widened the radius
  IncumbentExhausted,  ///< full poll failed; incumbent marked exhausted
  BudgetExhausted,     ///< budget ran out mid-poll
};

/// One evaluated candidate, in evaluation order.
struct TraceRecord {
  int eval_index = 0;        ///< shared sequence number, strictly increasing
  SwitchVector candidate;
  Metrics metrics;
  FilterDecision decision;
  int incumbent_id = -1;     ///< -1 for the initial draw and random search
  int filter_size_after = 0;
};

/// One discarded out-of-domain poll point (never evaluated).
struct SkipRecord {
  int seq = 0;             ///< shared sequence number
  std::vector<int> point;  ///< raw integer poll point, entries may leave {0,1}
  int incumbent_id = -1;
  int filter_size = 0;
};

/// Run configuration common to MADS and the random baseline.
struct OptimizerConfig {
  std::size_t n = 0;          ///< switch count; must be >= 1
  int budget = 1000;          ///< max evaluations (>= 1 for MADS)
  std::uint64_t seed = 0;
  PollOrder poll_order = PollOrder::Lexicographic;
  IncumbentPolicy incumbent_policy = IncumbentPolicy::RoundRobin;
  int mesh_radius = 1;        ///< initial poll radius; must be 1 unless adaptive
  bool mesh_adaptive = false; ///< enable the widening-radius extension
};

/// Full optimizer state threaded through mads_step.
struct OptimizerState {
  FrontierFilter filter;
  int incumbent_id = -1;
  int eval_count = 0;
  int budget = 0;
  std::uint64_t rng_seed = 0;
  PollOrder poll_order = PollOrder::Lexicographic;
  IncumbentPolicy incumbent_policy = IncumbentPolicy::RoundRobin;
  std::set<int> polled_exhaustively;
  int mesh_radius = 1;
  bool mesh_adaptive = false;
  std::vector<TraceRecord> trace;
  std::vector<SkipRecord> skips;
  std::size_t n = 0;
  int step_count = 0;
  int next_seq = 1;
};

/// Outcome of a completed run.
struct RunResult {
  FrontierFilter frontier;
  std::vector<TraceRecord> trace;
  std::vector<SkipRecord> skips;
  int evaluations_used = 0;
  int steps = 0;
  StopReason stop_reason = StopReason::Budget;
};

/// Thrown by select_incumbent when no entry is left to poll; signals
/// natural termination rather than a failure.
class AllEntriesExhausted : public Error {
 public:
  AllEntriesExhausted() : Error("every frontier entry is exhaustively polled") {}
};

/**
 * @brief Picks the next incumbent among not-yet-exhausted filter entries.
 *
 * Deterministic under both policies. Throws AllEntriesExhausted when the
 * filter is empty or every entry has been exhaustively polled.
 */
int select_incumbent(const FrontierFilter& filter, IncumbentPolicy policy,
                     const std::set<int>& polled_exhaustively);

/**
 * @brief Runs one poll iteration around the selected incumbent.
 *
 * Invalid points are appended to the skip log without consuming budget;
 * valid points are evaluated in poll order and offered to the filter, with
 * an early break on the first accepted candidate. Acceptance clears the
 * exhaustion marks (new neighborhoods exist) and, in adaptive mode, resets
 * the radius to 1. A fully failed poll widens the radius (adaptive mode,
 * below the cap) or marks the incumbent exhausted. Running out of budget
 * mid-poll leaves the incumbent unmarked, since its neighborhood was not
 * fully examined.
 */
StepOutcome mads_step(OptimizerState& state, const Evaluator& evaluator);

/// True iff the budget is consumed or every filter entry is exhausted.
[[nodiscard]] bool should_stop(const OptimizerState& state);

/**
 * @brief Full MADS run: seeded random start, then steps until should_stop.
 *
 * Throws ConfigError for n = 0, budget < 1, or a radius other than 1
 * without adaptive mode; evaluator failures surface as EvaluationError with
 * the offending candidate in the message.
 */
RunResult run_mads(const OptimizerConfig& config, const Evaluator& evaluator);

/**
 * @brief Baseline: budget independent uniform draws through the same filter.
 *
 * Accepts budget = 0 (empty result). Candidates are drawn with replacement;
 * the trace and filter follow the same rules as run_mads.
 */
RunResult run_random_search(const OptimizerConfig& config,
                            const Evaluator& evaluator);

}  // namespace feedermads

#endif  // FEEDERMADS_OPTIMIZER_HPP
