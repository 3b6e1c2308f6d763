#include "feedermads/topology.hpp"

#include <numeric>
#include <vector>

#include "network_index.hpp"

namespace feedermads {
namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

TopologyReport check_topology(const NetworkModel& network,
                              const SwitchVector& x) {
  validate_network(network);
  detail::require_dimension(network, x);
  const detail::NetworkIndex index(network);
  const std::vector<std::size_t> closed = index.closed_branches(network, x);

  const std::size_t n_buses = network.buses.size();
  std::vector<std::size_t> parent(n_buses);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t b : closed) {
    const Branch& br = network.branches[b];
    const std::size_t u = find_root(parent, index.bus_pos.at(br.from));
    const std::size_t v = find_root(parent, index.bus_pos.at(br.to));
    if (u != v) parent[u] = v;
  }

  int components = 0;
  for (std::size_t i = 0; i < n_buses; ++i) {
    if (find_root(parent, i) == i) ++components;
  }
  const std::size_t source_root =
      find_root(parent, index.bus_pos.at(network.source_bus));
  int islands = 0;
  for (std::size_t i = 0; i < n_buses; ++i) {
    if (find_root(parent, i) != source_root) ++islands;
  }

  TopologyReport report;
  report.n_islands = islands;
  report.n_loops = static_cast<int>(closed.size()) -
                   static_cast<int>(n_buses) + components;
  report.connected = islands == 0;
  report.radial = report.connected && report.n_loops == 0;
  report.violation = static_cast<double>(report.n_islands + report.n_loops);
  return report;
}

}  // namespace feedermads
