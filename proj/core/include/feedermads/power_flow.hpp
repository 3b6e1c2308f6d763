/**
 * @file power_flow.hpp
 * @brief Backward/forward sweep power flow on a radial configuration.
 *
 * The source bus is the slack at 1.0 per-unit, zero angle; loads are
 * constant-PQ. A backward sweep accumulates branch currents from the leaves,
 * a forward sweep propagates voltage drops from the source, repeating until
 * the largest per-bus voltage update falls below tolerance. One extra
 * uncounted sweep after detection tightens current/voltage consistency so
 * power conservation holds well inside the solver tolerance.
 */

#ifndef FEEDERMADS_POWER_FLOW_HPP
#define FEEDERMADS_POWER_FLOW_HPP

#include <complex>
#include <vector>

#include "feedermads/network_model.hpp"
#include "feedermads/switch_vector.hpp"

namespace feedermads {

struct SolverOptions {
  double tolerance = 1e-6;  ///< per-unit voltage-update threshold
  int max_iterations = 100;
};

struct PowerFlowSolution {
  std::vector<std::complex<double>> bus_voltage;    ///< p.u., buses order
  std::vector<std::complex<double>> branch_current; ///< p.u., from->to sign; 0 when open
  double total_loss_kw = 0.0;
  bool converged = false;
  int iterations = 0;
};

/**
 * @brief Solves the configuration's power flow.
 *
 * Requires the closed-branch subgraph to be a spanning tree; a non-radial or
 * disconnected configuration throws EvaluationError (callers gate on
 * check_topology first). Non-convergence within the iteration cap is not an
 * error: the solution comes back with converged = false.
 */
PowerFlowSolution solve_power_flow(const NetworkModel& network,
                                   const SwitchVector& x,
                                   const SolverOptions& options = {});

}  // namespace feedermads

#endif  // FEEDERMADS_POWER_FLOW_HPP
