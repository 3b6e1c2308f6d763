#include "feedermads/network_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "feedermads/errors.hpp"

namespace feedermads {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require_field(const json& parent, const char* key,
                          const std::string& where) {
  auto it = parent.find(key);
  if (it == parent.end()) {
    throw ParseError("network file: missing field '" + std::string(key) +
                     "' in " + where);
  }
  return *it;
}

double require_number(const json& parent, const char* key,
                      const std::string& where) {
  const json& value = require_field(parent, key, where);
  if (!value.is_number()) {
    throw ParseError("network file: field '" + std::string(key) + "' in " +
                     where + " must be a number");
  }
  return value.get<double>();
}

int require_int(const json& parent, const char* key, const std::string& where) {
  const json& value = require_field(parent, key, where);
  if (!value.is_number_integer()) {
    throw ParseError("network file: field '" + std::string(key) + "' in " +
                     where + " must be an integer");
  }
  return value.get<int>();
}

bool require_bool(const json& parent, const char* key,
                  const std::string& where) {
  const json& value = require_field(parent, key, where);
  if (!value.is_boolean()) {
    throw ParseError("network file: field '" + std::string(key) + "' in " +
                     where + " must be a boolean");
  }
  return value.get<bool>();
}

NetworkModel from_json(const json& j) {
  if (!j.is_object()) {
    throw ParseError("network file: top level must be a JSON object");
  }
  const int version = require_int(j, "schema_version", "top level");
  if (version != 1) {
    throw ValidationError("unsupported network schema_version " +
                          std::to_string(version));
  }

  NetworkModel model;
  const json& base = require_field(j, "base", "top level");
  model.s_base_kva = require_number(base, "s_base_kva", "base");
  model.v_base_kv = require_number(base, "v_base_kv", "base");

  if (auto it = j.find("v_limits"); it != j.end()) {
    model.v_min = require_number(*it, "min", "v_limits");
    model.v_max = require_number(*it, "max", "v_limits");
  }

  model.source_bus = require_int(j, "source_bus", "top level");

  const json& buses = require_field(j, "buses", "top level");
  if (!buses.is_array() || buses.empty()) {
    throw ParseError("network file: 'buses' must be a non-empty array");
  }
  for (const json& b : buses) {
    Bus bus;
    bus.id = require_int(b, "id", "buses[]");
    const std::string where = "bus " + std::to_string(bus.id);
    bus.load_p_kw = require_number(b, "p_kw", where);
    bus.load_q_kvar = require_number(b, "q_kvar", where);
    model.buses.push_back(bus);
  }

  const json& branches = require_field(j, "branches", "top level");
  if (!branches.is_array()) {
    throw ParseError("network file: 'branches' must be an array");
  }
  for (const json& b : branches) {
    Branch branch;
    branch.id = require_int(b, "id", "branches[]");
    const std::string where = "branch " + std::to_string(branch.id);
    branch.from = require_int(b, "from", where);
    branch.to = require_int(b, "to", where);
    branch.r_pu = require_number(b, "r_pu", where);
    branch.x_pu = require_number(b, "x_pu", where);
    branch.rating_pu = require_number(b, "rating_pu", where);
    const bool switchable = require_bool(b, "switchable", where);
    model.branches.push_back(branch);
    if (switchable) {
      model.switchable.push_back(branch.id);
    } else {
      model.fixed_closed.insert(branch.id);
    }
  }

  validate_network(model);
  return model;
}

}  // namespace

NetworkModel parse_network(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("network file is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

NetworkModel load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open network file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading network file '" + path + "'");
  }
  try {
    return parse_network(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " (" + path + ")");
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(e.what()) + " (" + path + ")");
  }
}

std::string format_network(const NetworkModel& network) {
  validate_network(network);
  std::vector<int> file_order;
  for (const Branch& br : network.branches) {
    if (network.fixed_closed.count(br.id) == 0) file_order.push_back(br.id);
  }
  if (file_order != network.switchable) {
    throw ValidationError(
        "switchable order does not follow branch declaration order; "
        "emitting it would change the SwitchVector indexing");
  }

  ordered_json j;
  j["schema_version"] = 1;
  j["base"] = {{"s_base_kva", network.s_base_kva},
               {"v_base_kv", network.v_base_kv}};
  j["v_limits"] = {{"min", network.v_min}, {"max", network.v_max}};
  j["source_bus"] = network.source_bus;
  j["buses"] = ordered_json::array();
  for (const Bus& b : network.buses) {
    j["buses"].push_back(ordered_json{
        {"id", b.id}, {"p_kw", b.load_p_kw}, {"q_kvar", b.load_q_kvar}});
  }
  j["branches"] = ordered_json::array();
  for (const Branch& br : network.branches) {
    j["branches"].push_back(
        ordered_json{{"id", br.id},
                     {"from", br.from},
                     {"to", br.to},
                     {"r_pu", br.r_pu},
                     {"x_pu", br.x_pu},
                     {"rating_pu", br.rating_pu},
                     {"switchable", network.fixed_closed.count(br.id) == 0}});
  }
  return j.dump(2) + "\n";
}

void save_network(const NetworkModel& network, const std::string& path) {
  const std::string text = format_network(network);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << text;
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace feedermads
