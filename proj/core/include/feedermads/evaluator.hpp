/**
 * @file evaluator.hpp
 * @brief Composition of topology, power flow, and violation modules into the
 *        black-box metric function.
 *
 * A configuration whose closed-branch subgraph is not a spanning tree is
 * priced at (infeasible loss, topology violation) without running power
 * flow. A radial configuration whose power flow fails to converge is priced
 * at (infeasible loss, 1). Otherwise f is the solved loss in kW and h the
 * largest single module violation.
 */

#ifndef FEEDERMADS_EVALUATOR_HPP
#define FEEDERMADS_EVALUATOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "feedermads/metrics.hpp"
#include "feedermads/network_model.hpp"
#include "feedermads/optimizer.hpp"
#include "feedermads/power_flow.hpp"
#include "feedermads/switch_vector.hpp"

namespace feedermads {

/**
 * @brief Per-module constraint violations for a converged solution.
 *
 * Modules, in order: "voltage" (worst per-unit band excursion), "thermal"
 * (worst fractional branch overload), "protection" and "voltage_regulation"
 * (stubs, always 0). Throws EvaluationError on an unconverged solution.
 */
std::vector<std::pair<std::string, double>> violations(
    const PowerFlowSolution& solution, const NetworkModel& network);

/// Full metric evaluation of one switch configuration.
Metrics evaluate(const NetworkModel& network, const SwitchVector& x,
                 const SolverOptions& options = {});

/// Packages evaluate as a self-contained black-box callable (owns a copy).
Evaluator make_evaluator(NetworkModel network, SolverOptions options = {});

}  // namespace feedermads

#endif  // FEEDERMADS_EVALUATOR_HPP
