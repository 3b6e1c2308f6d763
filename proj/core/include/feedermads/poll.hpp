/**
 * @file poll.hpp
 * @brief Poll-set generation around an incumbent switch vector.
 *
 * At unit radius the poll set is formed by integer arithmetic x_k ± e_i,
 * giving 2n points of which exactly n stay inside {0,1}^n; the out-of-domain
 * points are kept in the set but flagged discarded so callers can log them
 * without evaluating. Radii above 1 are an extension used by the adaptive
 * mesh mode: the poll set becomes every vector at Hamming distance exactly r,
 * all of which are valid by construction.
 */

#ifndef FEEDERMADS_POLL_HPP
#define FEEDERMADS_POLL_HPP

#include <cstdint>
#include <vector>

#include "feedermads/switch_vector.hpp"

namespace feedermads {

/// Emission order of poll points.
enum class PollOrder {
  Lexicographic,  ///< (+e_1, -e_1, +e_2, -e_2, ...); combination order for r>1
  SeededRandom,   ///< seed-determined permutation of the lexicographic set
};

/**
 * @brief One candidate poll point, recorded before domain validation.
 *
 * direction is +i for x_k + e_i and -i for x_k - e_i (axes 1-based); it is 0
 * for multi-bit points at radius > 1. point holds the raw integer vector, so
 * discarded points can still be reported verbatim.
 */
struct PollPoint {
  int direction = 0;
  std::vector<int> point;
  bool valid = false;
  bool discarded = false;

  /// Converts a valid point to a switch vector; undefined for invalid points.
  [[nodiscard]] SwitchVector as_switch_vector() const {
    SwitchVector x(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
      x[i] = static_cast<std::uint8_t>(point[i]);
    }
    return x;
  }
};

/**
 * @brief Builds the poll set around x_k at the given Hamming radius.
 *
 * For SeededRandom order the permutation depends only on `seed`; callers that
 * want per-iteration variety mix an iteration counter into the seed
 * themselves. Throws ConfigError when radius < 1 or radius exceeds the
 * dimension (no point lies at that distance).
 */
std::vector<PollPoint> generate_poll_set(const SwitchVector& x_k,
                                         PollOrder order,
                                         std::uint64_t seed,
                                         int radius = 1);

}  // namespace feedermads

#endif  // FEEDERMADS_POLL_HPP
