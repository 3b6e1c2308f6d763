#include <doctest.h>

#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "feedermads/errors.hpp"
#include "feedermads/optimizer.hpp"
#include "feedermads/switch_vector.hpp"

using namespace feedermads;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int ones(const SwitchVector& x) {
  int c = 0;
  for (auto b : x) c += b;
  return c;
}

/// Pure synthetic objective with distinct per-bit weights and a coarse h.
Metrics synthetic(const SwitchVector& x) {
  double f = 3.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f += x[i] * static_cast<double>((i * 37) % 11 + 1);
  }
  return Metrics{f, (ones(x) % 3) * 0.25};
}

/// Two local minima under single-bit polling: 0000 (f=10) and 1100 (f=5).
Metrics two_basin(const SwitchVector& x) {
  static const std::map<std::string, double> table = {
      {"0000", 10}, {"1000", 20}, {"0100", 20}, {"0010", 20}, {"0001", 20},
      {"1100", 5},  {"1010", 30}, {"1001", 30}, {"0110", 30}, {"0101", 30},
      {"0011", 30}, {"1110", 40}, {"1101", 40}, {"1011", 40}, {"0111", 40},
      {"1111", 50}};
  return Metrics{table.at(to_bits(x)), 0.0};
}

/// State as run_mads would leave it right after evaluating a seed point.
OptimizerState seeded_state(const char* bits, const Evaluator& evaluator,
                            bool adaptive = false) {
  OptimizerState s;
  const SwitchVector x = from_bits(bits);
  s.n = x.size();
  s.budget = 1000;
  s.mesh_adaptive = adaptive;
  s.filter.insert(x, evaluator(x));
  s.eval_count = 1;
  s.next_seq = 2;
  return s;
}

FrontierFilter staircase_filter() {
  FrontierFilter filter;
  const double points[][2] = {{100, 3},   {90, 2.5},  {80, 2},   {70, 1.5},
                              {100, 1.0}, {90, 0.9},  {120, 0.5}, {110, 0.4}};
  std::uint64_t code = 0;
  for (const auto& p : points) {
    filter.insert(from_index(code++, 8), Metrics{p[0], p[1]});
  }
  return filter;
}

}  // namespace

TEST_CASE("incumbent selection walks the filter deterministically") {
  const FrontierFilter filter = staircase_filter();
  std::vector<int> ids;
  for (const auto& e : filter.entries()) ids.push_back(e.id);
  REQUIRE(ids == std::vector<int>{3, 5, 7});

  SUBCASE("round robin picks the lowest unexhausted id") {
    CHECK(select_incumbent(filter, IncumbentPolicy::RoundRobin, {}) == 3);
    CHECK(select_incumbent(filter, IncumbentPolicy::RoundRobin, {3}) == 5);
    CHECK(select_incumbent(filter, IncumbentPolicy::RoundRobin, {3, 5}) == 7);
    CHECK_THROWS_AS(
        select_incumbent(filter, IncumbentPolicy::RoundRobin, {3, 5, 7}),
        AllEntriesExhausted);
  }

  SUBCASE("feasibility first walks from the low-h end") {
    CHECK(select_incumbent(filter, IncumbentPolicy::FeasibilityFirst, {}) == 7);
    CHECK(select_incumbent(filter, IncumbentPolicy::FeasibilityFirst, {7}) == 5);
    CHECK(select_incumbent(filter, IncumbentPolicy::FeasibilityFirst, {7, 5}) ==
          3);
    CHECK_THROWS_AS(
        select_incumbent(filter, IncumbentPolicy::FeasibilityFirst, {3, 5, 7}),
        AllEntriesExhausted);
  }

  SUBCASE("empty filter has no incumbent") {
    FrontierFilter empty;
    CHECK_THROWS_AS(select_incumbent(empty, IncumbentPolicy::RoundRobin, {}),
                    AllEntriesExhausted);
  }
}

TEST_CASE("a better first neighbor ends the poll after one evaluation") {
  const Evaluator evaluator = [](const SwitchVector& x) {
    return Metrics{to_bits(x) == "110" ? 40.0 : 50.0, 0.0};
  };
  OptimizerState state = seeded_state("010", evaluator);
  const StepOutcome outcome = mads_step(state, evaluator);
  CHECK(outcome == StepOutcome::Improved);
  CHECK(state.eval_count == 2);
  CHECK(state.skips.empty());
  REQUIRE(state.trace.size() == 1);
  CHECK(state.trace[0].decision.kind == FilterDecision::Kind::AddedReplacing);
  CHECK(state.trace[0].incumbent_id == 0);
  CHECK(to_bits(state.trace[0].candidate) == "110");
  CHECK(state.polled_exhaustively.empty());
}

TEST_CASE("a locally optimal incumbent costs n evaluations and is marked") {
  const Evaluator evaluator = [](const SwitchVector& x) {
    return Metrics{to_bits(x) == "010" ? 10.0 : 99.0, 0.0};
  };
  OptimizerState state = seeded_state("010", evaluator);
  const StepOutcome outcome = mads_step(state, evaluator);
  CHECK(outcome == StepOutcome::IncumbentExhausted);
  CHECK(state.eval_count == 4);   // seed + 3 valid polls
  CHECK(state.trace.size() == 3);
  CHECK(state.skips.size() == 3);
  CHECK(state.polled_exhaustively == std::set<int>{0});
  CHECK(should_stop(state));
}

TEST_CASE("running out mid-poll leaves the incumbent unmarked") {
  const Evaluator evaluator = [](const SwitchVector& x) {
    return Metrics{to_bits(x) == "010" ? 10.0 : 99.0, 0.0};
  };
  OptimizerState state = seeded_state("010", evaluator);
  state.budget = 2;
  const StepOutcome outcome = mads_step(state, evaluator);
  CHECK(outcome == StepOutcome::BudgetExhausted);
  CHECK(state.eval_count == 2);
  CHECK(state.trace.size() == 1);
  CHECK(state.skips.size() == 2);  // -e1 and +e2 were logged before the stop
  CHECK(state.polled_exhaustively.empty());
  CHECK(should_stop(state));
}

TEST_CASE("an accepted candidate clears every exhaustion mark") {
  const Evaluator evaluator = [](const SwitchVector& x) {
    const std::string bits = to_bits(x);
    if (bits == "00") return Metrics{10, 1.0};
    if (bits == "11") return Metrics{20, 0.0};
    if (bits == "10") return Metrics{5, 1.0};
    return Metrics{99, 9.0};
  };
  OptimizerState state = seeded_state("00", evaluator);
  state.filter.insert(from_bits("11"), evaluator(from_bits("11")));
  state.eval_count = 2;
  state.next_seq = 3;
  state.polled_exhaustively = {1};

  const StepOutcome outcome = mads_step(state, evaluator);
  CHECK(outcome == StepOutcome::Improved);
  CHECK(state.polled_exhaustively.empty());
  CHECK(state.filter.size() == 2);
  CHECK(state.filter.find(2) != nullptr);  // (5, 1.0) replaced entry 0
  CHECK(state.filter.find(0) == nullptr);
}

TEST_CASE("adaptive polling escapes a single-bit trap through radius 2") {
  OptimizerState state = seeded_state("0000", two_basin, true);
  std::vector<StepOutcome> outcomes;
  while (!should_stop(state)) outcomes.push_back(mads_step(state, two_basin));

  const std::vector<StepOutcome> expected = {
      StepOutcome::RadiusExpanded,       // radius 1 poll of 0000 fails
      StepOutcome::Improved,             // first radius-2 point is 1100
      StepOutcome::RadiusExpanded,       // radius 1 poll of 1100 fails
      StepOutcome::RadiusExpanded,       // radius 2 fails too
      StepOutcome::IncumbentExhausted};  // radius 4 (the cap) fails
  CHECK(outcomes == expected);
  CHECK(state.eval_count == 1 + 4 + 1 + 4 + 6 + 1);
  CHECK(state.mesh_radius == 1);
  REQUIRE(state.filter.size() == 1);
  CHECK(to_bits(state.filter.entries()[0].x) == "1100");
  CHECK(state.filter.entries()[0].m.loss_kw == 5.0);

  SUBCASE("the fixed mesh stays trapped at the same start") {
    OptimizerState fixed = seeded_state("0000", two_basin, false);
    CHECK(mads_step(fixed, two_basin) == StepOutcome::IncumbentExhausted);
    CHECK(should_stop(fixed));
    CHECK(fixed.eval_count == 5);
    CHECK(to_bits(fixed.filter.entries()[0].x) == "0000");
  }
}

TEST_CASE("full adaptive runs always reach the deeper basin") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    CAPTURE(seed);
    OptimizerConfig config;
    config.n = 4;
    config.budget = 100;
    config.seed = seed;
    config.mesh_adaptive = true;
    const RunResult adaptive = run_mads(config, two_basin);
    CHECK(adaptive.stop_reason == StopReason::Exhaustion);
    REQUIRE(adaptive.frontier.size() == 1);
    CHECK(adaptive.frontier.entries()[0].m.loss_kw == 5.0);

    config.mesh_adaptive = false;
    const RunResult fixed = run_mads(config, two_basin);
    CHECK(fixed.stop_reason == StopReason::Exhaustion);
    REQUIRE(fixed.frontier.size() == 1);
    const double f = fixed.frontier.entries()[0].m.loss_kw;
    CHECK((f == 5.0 || f == 10.0));
    CHECK(fixed.evaluations_used <= adaptive.evaluations_used);
  }
}

TEST_CASE("two switches: descent always lands on the all-closed optimum") {
  const Evaluator evaluator = [](const SwitchVector& x) {
    return Metrics{10.0 * (2 - ones(x)), 0.0};
  };
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CAPTURE(seed);
    OptimizerConfig config;
    config.n = 2;
    config.budget = 50;
    config.seed = seed;
    const RunResult result = run_mads(config, evaluator);
    CHECK(result.stop_reason == StopReason::Exhaustion);
    REQUIRE(result.frontier.size() == 1);
    CHECK(to_bits(result.frontier.entries()[0].x) == "11");
    CHECK(result.frontier.entries()[0].m.loss_kw == 0.0);
  }
}

TEST_CASE("a constant evaluator exhausts after n duplicate rejections") {
  const Evaluator evaluator = [](const SwitchVector&) {
    return Metrics{42.0, 0.0};
  };
  OptimizerConfig config;
  config.n = 5;
  config.budget = 100;
  config.seed = 3;
  const RunResult result = run_mads(config, evaluator);
  CHECK(result.stop_reason == StopReason::Exhaustion);
  CHECK(result.evaluations_used == 6);
  CHECK(result.steps == 1);
  REQUIRE(result.frontier.size() == 1);
  REQUIRE(result.trace.size() == 6);
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    CHECK(result.trace[i].decision.kind ==
          FilterDecision::Kind::RejectedDuplicate);
    CHECK(result.trace[i].decision.existing_id == 0);
  }
}

TEST_CASE("budget of one stops right after the seed evaluation") {
  OptimizerConfig config;
  config.n = 6;
  config.budget = 1;
  const RunResult result = run_mads(config, synthetic);
  CHECK(result.evaluations_used == 1);
  CHECK(result.steps == 0);
  CHECK(result.stop_reason == StopReason::Budget);
  CHECK(result.frontier.size() == 1);
  CHECK(result.trace.size() == 1);
  CHECK(result.trace[0].incumbent_id == -1);
  CHECK(result.trace[0].eval_index == 1);
}

TEST_CASE("identical configurations replay identical runs") {
  OptimizerConfig config;
  config.n = 8;
  config.budget = 60;
  config.seed = 7;

  for (PollOrder order : {PollOrder::Lexicographic, PollOrder::SeededRandom}) {
    CAPTURE(order == PollOrder::Lexicographic);
    config.poll_order = order;
    const RunResult a = run_mads(config, synthetic);
    const RunResult b = run_mads(config, synthetic);
    CHECK(a.evaluations_used == b.evaluations_used);
    CHECK(a.stop_reason == b.stop_reason);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      CHECK(a.trace[i].eval_index == b.trace[i].eval_index);
      CHECK(a.trace[i].candidate == b.trace[i].candidate);
      CHECK(a.trace[i].metrics == b.trace[i].metrics);
      CHECK(a.trace[i].decision.kind == b.trace[i].decision.kind);
      CHECK(a.trace[i].incumbent_id == b.trace[i].incumbent_id);
    }
    REQUIRE(a.skips.size() == b.skips.size());
    for (std::size_t i = 0; i < a.skips.size(); ++i) {
      CHECK(a.skips[i].seq == b.skips[i].seq);
      CHECK(a.skips[i].point == b.skips[i].point);
    }
  }

  SUBCASE("a different seed changes the trajectory") {
    config.poll_order = PollOrder::Lexicographic;
    const RunResult a = run_mads(config, synthetic);
    config.seed = 8;
    const RunResult c = run_mads(config, synthetic);
    bool differs = a.trace.size() != c.trace.size();
    for (std::size_t i = 0; !differs && i < a.trace.size(); ++i) {
      differs = !(a.trace[i].candidate == c.trace[i].candidate);
    }
    CHECK(differs);
  }
}

TEST_CASE("sequence numbers partition evaluations and skips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CAPTURE(seed);
    OptimizerConfig config;
    config.n = 8;
    config.budget = 40;
    config.seed = seed;
    const RunResult result = run_mads(config, synthetic);

    CHECK(result.evaluations_used <= config.budget);
    CHECK(static_cast<int>(result.trace.size()) == result.evaluations_used);
    if (result.stop_reason == StopReason::Budget) {
      CHECK(result.evaluations_used == config.budget);
    }

    std::set<int> seqs;
    for (const auto& r : result.trace) CHECK(seqs.insert(r.eval_index).second);
    for (const auto& s : result.skips) CHECK(seqs.insert(s.seq).second);
    REQUIRE(!seqs.empty());
    CHECK(*seqs.begin() == 1);
    CHECK(*seqs.rbegin() == static_cast<int>(seqs.size()));
    CHECK(is_pareto_consistent(result.frontier));
  }
}

TEST_CASE("random search draws the same start point as the engine") {
  OptimizerConfig config;
  config.n = 8;
  config.budget = 30;
  config.seed = 5;
  const RunResult random_run = run_random_search(config, synthetic);
  const RunResult mads_run = run_mads(config, synthetic);
  REQUIRE(!random_run.trace.empty());
  CHECK(random_run.trace[0].candidate == mads_run.trace[0].candidate);

  CHECK(random_run.evaluations_used == 30);
  CHECK(random_run.stop_reason == StopReason::Budget);
  CHECK(random_run.trace.size() == 30);
  CHECK(random_run.skips.empty());
  for (const auto& r : random_run.trace) CHECK(r.incumbent_id == -1);
  CHECK(is_pareto_consistent(random_run.frontier));

  const RunResult replay = run_random_search(config, synthetic);
  REQUIRE(replay.trace.size() == random_run.trace.size());
  for (std::size_t i = 0; i < replay.trace.size(); ++i) {
    CHECK(replay.trace[i].candidate == random_run.trace[i].candidate);
  }

  SUBCASE("budget zero yields an empty run") {
    config.budget = 0;
    const RunResult empty = run_random_search(config, synthetic);
    CHECK(empty.evaluations_used == 0);
    CHECK(empty.frontier.empty());
    CHECK(empty.trace.empty());
    CHECK(empty.stop_reason == StopReason::Budget);
  }
}

TEST_CASE("evaluator failures surface with the offending candidate") {
  const Evaluator thrower = [](const SwitchVector&) -> Metrics {
    throw std::runtime_error("boom");
  };
  OptimizerConfig config;
  config.n = 4;
  config.seed = 9;
  try {
    run_mads(config, thrower);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("evaluator failed on candidate ") != std::string::npos);
    CHECK(msg.find("boom") != std::string::npos);
  }
}

TEST_CASE("bad configurations are refused up front") {
  const Evaluator evaluator = [](const SwitchVector&) {
    return Metrics{1.0, 0.0};
  };
  OptimizerConfig config;
  config.n = 0;
  CHECK_THROWS_AS(run_mads(config, evaluator), ConfigError);
  CHECK_THROWS_AS(run_random_search(config, evaluator), ConfigError);

  config.n = 8;
  config.budget = 0;
  CHECK_THROWS_AS(run_mads(config, evaluator), ConfigError);

  config.budget = 10;
  config.mesh_radius = 2;
  CHECK_THROWS_AS(run_mads(config, evaluator), ConfigError);  // not adaptive

  config.mesh_adaptive = true;
  config.mesh_radius = 5;  // above the adaptive cap of 4
  CHECK_THROWS_AS(run_mads(config, evaluator), ConfigError);

  config.mesh_radius = 1;
  config.n = 2;
  config.mesh_adaptive = true;
  CHECK_NOTHROW(run_mads(config, evaluator));
}

TEST_CASE("infeasible metrics flow through the filter unharmed") {
  const Evaluator evaluator = [](const SwitchVector& x) {
    if (ones(x) % 2 == 0) return Metrics::infeasible(2.0);
    return Metrics{50.0 - ones(x), 0.0};
  };
  OptimizerConfig config;
  config.n = 6;
  config.budget = 200;
  config.seed = 11;
  const RunResult result = run_mads(config, evaluator);
  CHECK(is_pareto_consistent(result.frontier));
  for (const auto& e : result.frontier.entries()) {
    if (e.m.is_infeasible()) CHECK(e.m.loss_kw == kInf);
  }
  bool found_feasible = false;
  for (const auto& e : result.frontier.entries()) {
    found_feasible |= e.m.is_feasible();
  }
  CHECK(found_feasible);
}
