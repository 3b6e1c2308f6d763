#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "feedermads/enumerate.hpp"
#include "feedermads/errors.hpp"
#include "feedermads/evaluator.hpp"
#include "feedermads/network_io.hpp"
#include "feedermads/switch_vector.hpp"
#include "feedermads/topology.hpp"
#include "independent_evaluator.hpp"
#include "test_util.hpp"

using namespace feedermads;

TEST_CASE("the twelve-switch feeder enumerates to a three-point frontier") {
  const NetworkModel net = load_network(testutil::data_file("feeder12.json"));
  const EnumerationResult result = enumerate_all(net);

  CHECK(result.trace.size() == 4096);
  CHECK(is_pareto_consistent(result.frontier));

  REQUIRE(result.frontier.size() == 3);
  const struct {
    const char* bits;
    double f;
    double h;
  } expected[] = {
      {"011110111001", 14.65268908113721, 0.3364303950110027},
      {"101110111001", 14.85478849933789, 0.1138407404365754},
      {"101111011001", 15.589112708124517, 0.0},
  };
  for (const auto& e : expected) {
    CAPTURE(e.bits);
    bool found = false;
    for (const auto& entry : result.frontier.entries()) {
      if (to_bits(entry.x) != e.bits) continue;
      found = true;
      CHECK(entry.m.loss_kw == doctest::Approx(e.f).epsilon(1e-9));
      CHECK(entry.m.violation == doctest::Approx(e.h).epsilon(1e-9));
    }
    CHECK(found);
  }

  SUBCASE("radial and feasible configuration counts") {
    int radial = 0;
    int feasible = 0;
    for (const TraceRecord& r : result.trace) {
      if (!r.metrics.is_infeasible()) ++radial;
      if (r.metrics.is_feasible()) ++feasible;
    }
    CHECK(radial == 144);
    CHECK(feasible == 105);
  }

  SUBCASE("trace rows follow the index order") {
    for (std::size_t k = 0; k < result.trace.size(); ++k) {
      const TraceRecord& r = result.trace[k];
      REQUIRE(r.eval_index == static_cast<int>(k) + 1);
      REQUIRE(to_index(r.candidate) == k);
      REQUIRE(r.incumbent_id == -1);
    }
  }
}

TEST_CASE("every configuration agrees with an independent solver") {
  const NetworkModel net = load_network(testutil::data_file("feeder12.json"));
  const EnumerationResult result = enumerate_all(net);

  for (const TraceRecord& r : result.trace) {
    const indep::Result ref = indep::evaluate(net, r.candidate);
    if (std::isinf(ref.f)) {
      REQUIRE(r.metrics.is_infeasible());
      REQUIRE(r.metrics.violation == ref.h);
    } else {
      REQUIRE(std::isfinite(r.metrics.loss_kw));
      REQUIRE(r.metrics.loss_kw ==
              doctest::Approx(ref.f).epsilon(1e-6));
      if (ref.h == 0.0) {
        REQUIRE(r.metrics.violation == doctest::Approx(0.0));
      } else {
        REQUIRE(r.metrics.violation ==
                doctest::Approx(ref.h).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("a network with no switches enumerates its single configuration") {
  const NetworkModel net = load_network(testutil::data_file("twobus.json"));
  const EnumerationResult result = enumerate_all(net);
  REQUIRE(result.trace.size() == 1);
  CHECK(result.trace[0].candidate.empty());
  CHECK(result.frontier.size() == 1);
  CHECK(result.frontier.entries()[0].m.is_feasible());
}

TEST_CASE("enumeration refuses more than twenty switches") {
  NetworkModel net;
  net.buses.push_back({0, 0, 0});
  net.source_bus = 0;
  for (int i = 1; i <= 21; ++i) {
    net.buses.push_back({i, 10, 5});
    net.branches.push_back({i, i - 1, i, 0.001, 0.001, 1.0});
    net.switchable.push_back(i);
  }
  net.s_base_kva = 1000;
  net.v_base_kv = 12.47;
  CHECK_THROWS_AS(enumerate_all(net), ConfigError);

  // The cap is about switch count, not size: fixing most branches closed
  // brings the same network under it.
  while (net.switchable.size() > 8) {
    net.fixed_closed.insert(net.switchable.back());
    net.switchable.pop_back();
  }
  CHECK_NOTHROW(enumerate_all(net));
}
