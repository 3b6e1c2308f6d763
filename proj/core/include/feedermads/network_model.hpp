/**
 * @file network_model.hpp
 * @brief Immutable description of a distribution feeder.
 *
 * Buses carry constant-PQ loads; branches carry per-unit series impedance
 * and a thermal rating. Branches are either permanently closed or remotely
 * switchable; the order of the switchable list defines the SwitchVector
 * indexing used everywhere else.
 */

#ifndef FEEDERMADS_NETWORK_MODEL_HPP
#define FEEDERMADS_NETWORK_MODEL_HPP

#include <set>
#include <vector>

namespace feedermads {

struct Bus {
  int id = 0;
  double load_p_kw = 0.0;
  double load_q_kvar = 0.0;
};

struct Branch {
  int id = 0;
  int from = 0;
  int to = 0;
  double r_pu = 0.0;
  double x_pu = 0.0;
  double rating_pu = 0.0;
};

struct NetworkModel {
  std::vector<Bus> buses;
  int source_bus = 0;
  std::vector<Branch> branches;
  std::vector<int> switchable;   ///< branch ids; position i = switch i
  std::set<int> fixed_closed;    ///< branch ids always in service
  double v_min = 0.95;           ///< per-unit voltage band
  double v_max = 1.05;
  double s_base_kva = 0.0;
  double v_base_kv = 0.0;
};

/**
 * @brief Checks every structural invariant of the model.
 *
 * Unique bus and branch ids, known endpoints, exactly one declared source,
 * nonnegative impedances, positive ratings, a proper voltage band, disjoint
 * switchable/fixed sets covering every branch exactly once. Throws
 * ValidationError naming the offending id on the first breach.
 */
void validate_network(const NetworkModel& network);

}  // namespace feedermads

#endif  // FEEDERMADS_NETWORK_MODEL_HPP
