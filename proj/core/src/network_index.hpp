// Internal indexed view of a NetworkModel shared by the topology and
// power-flow translation units. Not installed.

#ifndef FEEDERMADS_SRC_NETWORK_INDEX_HPP
#define FEEDERMADS_SRC_NETWORK_INDEX_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "feedermads/errors.hpp"
#include "feedermads/network_model.hpp"
#include "feedermads/switch_vector.hpp"

namespace feedermads::detail {

struct NetworkIndex {
  std::unordered_map<int, std::size_t> bus_pos;
  std::unordered_map<int, std::size_t> branch_pos;

  explicit NetworkIndex(const NetworkModel& network) {
    bus_pos.reserve(network.buses.size());
    for (std::size_t i = 0; i < network.buses.size(); ++i) {
      bus_pos.emplace(network.buses[i].id, i);
    }
    branch_pos.reserve(network.branches.size());
    for (std::size_t i = 0; i < network.branches.size(); ++i) {
      branch_pos.emplace(network.branches[i].id, i);
    }
  }

  // Positions of in-service branches for configuration x, ascending.
  std::vector<std::size_t> closed_branches(const NetworkModel& network,
                                           const SwitchVector& x) const {
    std::vector<char> closed(network.branches.size(), 0);
    for (int id : network.fixed_closed) closed[branch_pos.at(id)] = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i]) closed[branch_pos.at(network.switchable[i])] = 1;
    }
    std::vector<std::size_t> result;
    result.reserve(network.branches.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      if (closed[i]) result.push_back(i);
    }
    return result;
  }
};

inline void require_dimension(const NetworkModel& network,
                              const SwitchVector& x) {
  if (x.size() != network.switchable.size()) {
    throw ConfigError("switch vector length " + std::to_string(x.size()) +
                      " does not match switchable-branch count " +
                      std::to_string(network.switchable.size()));
  }
}

}  // namespace feedermads::detail

#endif  // FEEDERMADS_SRC_NETWORK_INDEX_HPP
