/**
 * @file enumerate.hpp
 * @brief Brute-force oracle: every configuration, exactly filtered.
 *
 * Configurations are visited in integer order with bit i of the index
 * mapped to switch i, so trace row k (1-based) holds the configuration
 * with index k-1.
 */

#ifndef FEEDERMADS_ENUMERATE_HPP
#define FEEDERMADS_ENUMERATE_HPP

#include <vector>

#include "feedermads/frontier_filter.hpp"
#include "feedermads/network_model.hpp"
#include "feedermads/optimizer.hpp"
#include "feedermads/power_flow.hpp"

namespace feedermads {

struct EnumerationResult {
  std::vector<TraceRecord> trace;  ///< all 2^n evaluations, index order
  FrontierFilter frontier;         ///< exact non-dominated set
};

/**
 * @brief Evaluates all 2^n switch configurations.
 *
 * Hard-capped at n <= 20 (ConfigError beyond that): the point of this oracle
 * is exactness at desk scale, not scalability.
 */
EnumerationResult enumerate_all(const NetworkModel& network,
                                const SolverOptions& options = {});

}  // namespace feedermads

#endif  // FEEDERMADS_ENUMERATE_HPP
