/**
 * @file topology.hpp
 * @brief Radiality and connectivity checks for a switch configuration.
 */

#ifndef FEEDERMADS_TOPOLOGY_HPP
#define FEEDERMADS_TOPOLOGY_HPP

#include "feedermads/network_model.hpp"
#include "feedermads/switch_vector.hpp"

namespace feedermads {

/**
 * @brief Structure of the closed-branch subgraph for one configuration.
 *
 * violation grades how far the configuration is from a spanning tree:
 * unreachable buses plus independent cycles, so it is 0 exactly when the
 * configuration is radial and fully connected.
 */
struct TopologyReport {
  bool connected = false;  ///< every bus reachable from the source
  bool radial = false;     ///< closed branches form a spanning tree
  int n_islands = 0;       ///< buses not reachable from the source
  int n_loops = 0;         ///< independent cycles: edges - buses + components
  double violation = 0.0;  ///< n_islands + n_loops
};

/**
 * @brief Analyzes the subgraph of fixed-closed plus commanded-closed branches.
 *
 * Throws ValidationError on a malformed network and ConfigError when the
 * switch vector length does not match the switchable-branch count.
 */
TopologyReport check_topology(const NetworkModel& network,
                              const SwitchVector& x);

}  // namespace feedermads

#endif  // FEEDERMADS_TOPOLOGY_HPP
