#include "feedermads/power_flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "feedermads/errors.hpp"
#include "network_index.hpp"

namespace feedermads {
namespace {

using Complex = std::complex<double>;

struct Tree {
  std::vector<std::size_t> order;          // BFS order, source first
  std::vector<std::size_t> parent_branch;  // branches index, per bus position
  std::vector<std::size_t> parent_bus;     // bus position of the parent
  std::vector<int> flow_sign;              // +1 if BFS direction is from->to
};

Tree build_tree(const NetworkModel& network,
                const detail::NetworkIndex& index,
                const std::vector<std::size_t>& closed) {
  const std::size_t n_buses = network.buses.size();
  if (closed.size() + 1 != n_buses) {
    throw EvaluationError(
        "power flow requires a spanning tree: " + std::to_string(closed.size()) +
        " closed branches over " + std::to_string(n_buses) + " buses");
  }

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n_buses);
  for (std::size_t b : closed) {
    const Branch& br = network.branches[b];
    const std::size_t u = index.bus_pos.at(br.from);
    const std::size_t v = index.bus_pos.at(br.to);
    adj[u].emplace_back(v, b);
    adj[v].emplace_back(u, b);
  }

  Tree tree;
  tree.order.reserve(n_buses);
  tree.parent_branch.assign(n_buses, static_cast<std::size_t>(-1));
  tree.parent_bus.assign(n_buses, static_cast<std::size_t>(-1));
  tree.flow_sign.assign(n_buses, 0);

  std::vector<char> seen(n_buses, 0);
  const std::size_t source = index.bus_pos.at(network.source_bus);
  seen[source] = 1;
  tree.order.push_back(source);
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    const std::size_t u = tree.order[head];
    for (const auto& [v, b] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      tree.parent_branch[v] = b;
      tree.parent_bus[v] = u;
      tree.flow_sign[v] =
          index.bus_pos.at(network.branches[b].from) == u ? +1 : -1;
      tree.order.push_back(v);
    }
  }
  if (tree.order.size() != n_buses) {
    throw EvaluationError("power flow requires a connected configuration: " +
                          std::to_string(n_buses - tree.order.size()) +
                          " buses unreachable from the source");
  }
  return tree;
}

}  // namespace

PowerFlowSolution solve_power_flow(const NetworkModel& network,
                                   const SwitchVector& x,
                                   const SolverOptions& options) {
  validate_network(network);
  detail::require_dimension(network, x);
  const detail::NetworkIndex index(network);
  const std::vector<std::size_t> closed = index.closed_branches(network, x);
  const Tree tree = build_tree(network, index, closed);

  const std::size_t n_buses = network.buses.size();
  const std::size_t source = index.bus_pos.at(network.source_bus);
  std::vector<Complex> load_pu(n_buses);
  for (std::size_t i = 0; i < n_buses; ++i) {
    load_pu[i] = Complex(network.buses[i].load_p_kw,
                         network.buses[i].load_q_kvar) /
                 network.s_base_kva;
  }

  std::vector<Complex> voltage(n_buses, Complex(1.0, 0.0));
  std::vector<Complex> subtree_current(n_buses);
  std::vector<Complex> branch_current(network.branches.size());

  auto sweep = [&](std::vector<Complex>& v_out) {
    for (std::size_t i = 0; i < n_buses; ++i) {
      subtree_current[i] =
          i == source ? Complex(0.0, 0.0) : std::conj(load_pu[i] / voltage[i]);
    }
    for (std::size_t k = n_buses; k-- > 1;) {
      const std::size_t bus = tree.order[k];
      branch_current[tree.parent_branch[bus]] =
          static_cast<double>(tree.flow_sign[bus]) * subtree_current[bus];
      subtree_current[tree.parent_bus[bus]] += subtree_current[bus];
    }
    v_out[source] = Complex(1.0, 0.0);
    for (std::size_t k = 1; k < n_buses; ++k) {
      const std::size_t bus = tree.order[k];
      const Branch& br = network.branches[tree.parent_branch[bus]];
      const Complex z(br.r_pu, br.x_pu);
      const Complex flow = static_cast<double>(tree.flow_sign[bus]) *
                           branch_current[tree.parent_branch[bus]];
      v_out[bus] = v_out[tree.parent_bus[bus]] - z * flow;
    }
  };

  PowerFlowSolution solution;
  std::vector<Complex> next(n_buses);
  for (int it = 1; it <= options.max_iterations; ++it) {
    sweep(next);
    double max_delta = 0.0;
    for (std::size_t i = 0; i < n_buses; ++i) {
      max_delta = std::max(max_delta, std::abs(next[i] - voltage[i]));
    }
    voltage = next;
    solution.iterations = it;
    if (max_delta < options.tolerance) {
      solution.converged = true;
      break;
    }
  }
  if (solution.converged) {
    sweep(next);
    voltage = next;
  }

  double loss_pu = 0.0;
  for (std::size_t b : closed) {
    loss_pu += network.branches[b].r_pu * std::norm(branch_current[b]);
  }

  solution.bus_voltage = std::move(voltage);
  solution.branch_current = std::move(branch_current);
  solution.total_loss_kw = loss_pu * network.s_base_kva;
  return solution;
}

}  // namespace feedermads
