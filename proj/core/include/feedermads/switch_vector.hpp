/**
 * @file switch_vector.hpp
 * @brief Binary switch-state vectors and their text rendering.
 *
 * A candidate configuration assigns each remotely switchable branch a state:
 * 1 closed, 0 open. Candidates are rendered as strings of '0'/'1' with
 * position i holding switch i, e.g. "0110" means switches 1 and 2 closed.
 */

#ifndef FEEDERMADS_SWITCH_VECTOR_HPP
#define FEEDERMADS_SWITCH_VECTOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "feedermads/errors.hpp"

namespace feedermads {

/// Switch states for all switchable branches; element i is switch i (0 or 1).
using SwitchVector = std::vector<std::uint8_t>;

/// Renders a switch vector as a '0'/'1' string, position i = switch i.
inline std::string to_bits(const SwitchVector& x) {
  std::string s;
  s.reserve(x.size());
  for (std::uint8_t v : x) s.push_back(v ? '1' : '0');
  return s;
}

/// Parses a '0'/'1' string back into a switch vector.
inline SwitchVector from_bits(const std::string& bits) {
  SwitchVector x;
  x.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ValidationError("invalid switch bit '" + std::string(1, c) +
                            "' in \"" + bits + "\"");
    }
    x.push_back(c == '1' ? 1 : 0);
  }
  return x;
}

/// Decodes the low n bits of an index: bit i of `code` becomes switch i.
inline SwitchVector from_index(std::uint64_t code, std::size_t n) {
  SwitchVector x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<std::uint8_t>((code >> i) & 1u);
  }
  return x;
}

/// Inverse of from_index: packs switch i into bit i.
inline std::uint64_t to_index(const SwitchVector& x) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) code |= (std::uint64_t{1} << i);
  }
  return code;
}

}  // namespace feedermads

#endif  // FEEDERMADS_SWITCH_VECTOR_HPP
