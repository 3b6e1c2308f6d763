#include "feedermads/optimizer.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "feedermads/rng.hpp"

namespace feedermads {
namespace {

Metrics evaluate_checked(const Evaluator& evaluator, const SwitchVector& x) {
  try {
    return evaluator(x);
  } catch (const std::exception& e) {
    throw EvaluationError("evaluator failed on candidate " + to_bits(x) +
                          ": " + e.what());
  }
}

SwitchVector draw_candidate(Rng& rng, std::size_t n) {
  SwitchVector x(n);
  for (auto& bit : x) bit = static_cast<std::uint8_t>(rng.next_bit());
  return x;
}

bool all_exhausted(const OptimizerState& state) {
  if (state.filter.empty()) return false;
  return std::all_of(state.filter.entries().begin(),
                     state.filter.entries().end(),
                     [&state](const FrontierEntry& e) {
                       return state.polled_exhaustively.count(e.id) > 0;
                     });
}

int adaptive_radius_cap(std::size_t n) {
  return static_cast<int>(std::min<std::size_t>(4, n));
}

void validate_dimension(const OptimizerConfig& config) {
  if (config.n == 0) {
    throw ConfigError("candidate dimension is zero: nothing to optimize");
  }
}

OptimizerState make_state(const OptimizerConfig& config) {
  OptimizerState state;
  state.budget = config.budget;
  state.rng_seed = config.seed;
  state.poll_order = config.poll_order;
  state.incumbent_policy = config.incumbent_policy;
  state.mesh_radius = config.mesh_radius;
  state.mesh_adaptive = config.mesh_adaptive;
  state.n = config.n;
  return state;
}

RunResult finish(OptimizerState&& state) {
  RunResult result;
  result.stop_reason =
      all_exhausted(state) ? StopReason::Exhaustion : StopReason::Budget;
  result.evaluations_used = state.eval_count;
  result.steps = state.step_count;
  result.frontier = std::move(state.filter);
  result.trace = std::move(state.trace);
  result.skips = std::move(state.skips);
  return result;
}

}  // namespace

int select_incumbent(const FrontierFilter& filter, IncumbentPolicy policy,
                     const std::set<int>& polled_exhaustively) {
  const FrontierEntry* best = nullptr;
  for (const FrontierEntry& e : filter.entries()) {
    if (polled_exhaustively.count(e.id) > 0) continue;
    if (policy == IncumbentPolicy::RoundRobin) return e.id;
    if (best == nullptr ||
        e.m.violation < best->m.violation ||
        (e.m.violation == best->m.violation && e.m.loss_kw < best->m.loss_kw)) {
      best = &e;
    }
  }
  if (best == nullptr) throw AllEntriesExhausted();
  return best->id;
}

StepOutcome mads_step(OptimizerState& state, const Evaluator& evaluator) {
  const int incumbent_id = select_incumbent(
      state.filter, state.incumbent_policy, state.polled_exhaustively);
  state.incumbent_id = incumbent_id;
  const SwitchVector center = state.filter.find(incumbent_id)->x;

  const std::uint64_t poll_seed =
      mix_seed(state.rng_seed, static_cast<std::uint64_t>(state.step_count));
  ++state.step_count;
  const std::vector<PollPoint> points =
      generate_poll_set(center, state.poll_order, poll_seed, state.mesh_radius);

  for (const PollPoint& p : points) {
    if (!p.valid) {
      state.skips.push_back(SkipRecord{state.next_seq++, p.point, incumbent_id,
                                       static_cast<int>(state.filter.size())});
      continue;
    }
    if (state.eval_count >= state.budget) return StepOutcome::BudgetExhausted;
    const SwitchVector candidate = p.as_switch_vector();
    const Metrics m = evaluate_checked(evaluator, candidate);
    ++state.eval_count;
    const FilterDecision decision = state.filter.insert(candidate, m);
    state.trace.push_back(TraceRecord{state.next_seq++, candidate, m, decision,
                                      incumbent_id,
                                      static_cast<int>(state.filter.size())});
    if (decision.accepted()) {
      state.polled_exhaustively.clear();
      if (state.mesh_adaptive) state.mesh_radius = 1;
      return StepOutcome::Improved;
    }
  }

  if (state.mesh_adaptive) {
    const int cap = adaptive_radius_cap(state.n);
    if (state.mesh_radius < cap) {
      state.mesh_radius = std::min(state.mesh_radius * 2, cap);
      return StepOutcome::RadiusExpanded;
    }
    state.mesh_radius = 1;
  }
  state.polled_exhaustively.insert(incumbent_id);
  return StepOutcome::IncumbentExhausted;
}

bool should_stop(const OptimizerState& state) {
  if (state.eval_count >= state.budget) return true;
  return all_exhausted(state);
}

RunResult run_mads(const OptimizerConfig& config, const Evaluator& evaluator) {
  validate_dimension(config);
  if (config.budget < 1) {
    throw ConfigError("MADS needs budget >= 1, got " +
                      std::to_string(config.budget));
  }
  if (config.mesh_radius < 1) {
    throw ConfigError("mesh radius must be >= 1, got " +
                      std::to_string(config.mesh_radius));
  }
  if (!config.mesh_adaptive && config.mesh_radius != 1) {
    throw ConfigError("mesh radius above 1 requires adaptive mode");
  }
  if (config.mesh_adaptive &&
      config.mesh_radius > adaptive_radius_cap(config.n)) {
    throw ConfigError("initial mesh radius exceeds the adaptive cap");
  }

  OptimizerState state = make_state(config);
  Rng rng(config.seed);
  const SwitchVector x0 = draw_candidate(rng, config.n);
  const Metrics m0 = evaluate_checked(evaluator, x0);
  ++state.eval_count;
  const FilterDecision d0 = state.filter.insert(x0, m0);
  state.trace.push_back(TraceRecord{state.next_seq++, x0, m0, d0, -1,
                                    static_cast<int>(state.filter.size())});

  while (!should_stop(state)) mads_step(state, evaluator);
  return finish(std::move(state));
}

RunResult run_random_search(const OptimizerConfig& config,
                            const Evaluator& evaluator) {
  validate_dimension(config);
  if (config.budget < 0) {
    throw ConfigError("random search needs budget >= 0, got " +
                      std::to_string(config.budget));
  }

  OptimizerState state = make_state(config);
  Rng rng(config.seed);
  for (int i = 0; i < config.budget; ++i) {
    const SwitchVector candidate = draw_candidate(rng, config.n);
    const Metrics m = evaluate_checked(evaluator, candidate);
    ++state.eval_count;
    const FilterDecision decision = state.filter.insert(candidate, m);
    state.trace.push_back(TraceRecord{state.next_seq++, candidate, m, decision,
                                      -1, static_cast<int>(state.filter.size())});
  }
  return finish(std::move(state));
}

}  // namespace feedermads
