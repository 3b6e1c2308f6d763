#include "feedermads/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "feedermads/errors.hpp"
#include "feedermads/topology.hpp"

namespace feedermads {

std::vector<std::pair<std::string, double>> violations(
    const PowerFlowSolution& solution, const NetworkModel& network) {
  if (!solution.converged) {
    throw EvaluationError("violations require a converged power flow");
  }

  double voltage = 0.0;
  for (const std::complex<double>& v : solution.bus_voltage) {
    const double mag = std::abs(v);
    voltage = std::max({voltage, network.v_min - mag, mag - network.v_max});
  }

  double thermal = 0.0;
  for (std::size_t b = 0; b < network.branches.size(); ++b) {
    const double mag = std::abs(solution.branch_current[b]);
    const double rating = network.branches[b].rating_pu;
    thermal = std::max(thermal, (mag - rating) / rating);
  }

  return {{"voltage", voltage},
          {"thermal", thermal},
          {"protection", 0.0},
          {"voltage_regulation", 0.0}};
}

Metrics evaluate(const NetworkModel& network, const SwitchVector& x,
                 const SolverOptions& options) {
  const TopologyReport topology = check_topology(network, x);
  if (topology.violation > 0.0) {
    return Metrics::infeasible(topology.violation);
  }
  const PowerFlowSolution solution = solve_power_flow(network, x, options);
  if (!solution.converged) {
    return Metrics::infeasible(1.0 + topology.violation);
  }
  double h = 0.0;
  for (const auto& [module, value] : violations(solution, network)) {
    h = std::max(h, value);
  }
  return Metrics{solution.total_loss_kw, h};
}

Evaluator make_evaluator(NetworkModel network, SolverOptions options) {
  auto shared = std::make_shared<const NetworkModel>(std::move(network));
  return [shared, options](const SwitchVector& x) {
    return evaluate(*shared, x, options);
  };
}

}  // namespace feedermads
