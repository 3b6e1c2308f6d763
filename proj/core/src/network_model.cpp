#include "feedermads/network_model.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "feedermads/errors.hpp"

namespace feedermads {

void validate_network(const NetworkModel& network) {
  if (network.buses.empty()) {
    throw ValidationError("network has no buses");
  }
  std::unordered_set<int> bus_ids;
  for (const Bus& b : network.buses) {
    if (!bus_ids.insert(b.id).second) {
      throw ValidationError("duplicate bus id " + std::to_string(b.id));
    }
  }
  if (bus_ids.count(network.source_bus) == 0) {
    throw ValidationError("source bus " + std::to_string(network.source_bus) +
                          " is not a declared bus");
  }

  std::unordered_map<int, const Branch*> branch_by_id;
  for (const Branch& br : network.branches) {
    if (!branch_by_id.emplace(br.id, &br).second) {
      throw ValidationError("duplicate branch id " + std::to_string(br.id));
    }
    if (bus_ids.count(br.from) == 0 || bus_ids.count(br.to) == 0) {
      throw ValidationError("branch " + std::to_string(br.id) +
                            " references an undeclared bus");
    }
    if (br.from == br.to) {
      throw ValidationError("branch " + std::to_string(br.id) +
                            " is a self-loop at bus " + std::to_string(br.from));
    }
    if (br.r_pu < 0.0 || br.x_pu < 0.0) {
      throw ValidationError("branch " + std::to_string(br.id) +
                            " has negative impedance");
    }
    if (br.rating_pu <= 0.0) {
      throw ValidationError("branch " + std::to_string(br.id) +
                            " has nonpositive rating");
    }
  }

  std::unordered_set<int> switchable_ids;
  for (int id : network.switchable) {
    if (branch_by_id.count(id) == 0) {
      throw ValidationError("switchable list references unknown branch id " +
                            std::to_string(id));
    }
    if (!switchable_ids.insert(id).second) {
      throw ValidationError("branch id " + std::to_string(id) +
                            " listed as switchable twice");
    }
    if (network.fixed_closed.count(id) > 0) {
      throw ValidationError("branch id " + std::to_string(id) +
                            " is both switchable and fixed closed");
    }
  }
  for (int id : network.fixed_closed) {
    if (branch_by_id.count(id) == 0) {
      throw ValidationError("fixed_closed references unknown branch id " +
                            std::to_string(id));
    }
  }
  for (const Branch& br : network.branches) {
    if (switchable_ids.count(br.id) == 0 &&
        network.fixed_closed.count(br.id) == 0) {
      throw ValidationError("branch " + std::to_string(br.id) +
                            " is neither switchable nor fixed closed");
    }
  }

  if (!(network.v_min < network.v_max)) {
    throw ValidationError("voltage limits require v_min < v_max");
  }
  if (network.s_base_kva <= 0.0 || network.v_base_kv <= 0.0) {
    throw ValidationError("system bases must be positive");
  }
}

}  // namespace feedermads
