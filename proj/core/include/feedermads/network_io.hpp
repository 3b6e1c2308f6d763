/**
 * @file network_io.hpp
 * @brief Versioned JSON persistence for NetworkModel.
 *
 * Schema (version 1):
 * @code
 * {
 *   "schema_version": 1,
 *   "base": {"s_base_kva": ..., "v_base_kv": ...},
 *   "v_limits": {"min": 0.95, "max": 1.05},        // optional, this default
 *   "source_bus": 0,
 *   "buses": [{"id": 0, "p_kw": 0.0, "q_kvar": 0.0}, ...],
 *   "branches": [{"id": 1, "from": 0, "to": 1, "r_pu": ..., "x_pu": ...,
 *                 "rating_pu": ..., "switchable": false}, ...]
 * }
 * @endcode
 *
 * Switchable branches are indexed by their order of appearance in the
 * branches array; that order defines the SwitchVector layout for the model.
 */

#ifndef FEEDERMADS_NETWORK_IO_HPP
#define FEEDERMADS_NETWORK_IO_HPP

#include <string>

#include "feedermads/network_model.hpp"

namespace feedermads {

/**
 * @brief Loads and fully validates a network file.
 *
 * Throws IoError when the file cannot be read, ParseError on malformed JSON
 * or missing/mistyped fields (with field context in the message), and
 * ValidationError on schema-level invariant breaches.
 */
NetworkModel load_network(const std::string& path);

/// Parses a network from an in-memory JSON string (same errors as load_network).
NetworkModel parse_network(const std::string& text);

/// Canonical JSON emission; reloading the result reproduces the model.
std::string format_network(const NetworkModel& network);

/// Writes format_network output to a file; throws IoError on failure.
void save_network(const NetworkModel& network, const std::string& path);

}  // namespace feedermads

#endif  // FEEDERMADS_NETWORK_IO_HPP
