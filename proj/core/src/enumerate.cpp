#include "feedermads/enumerate.hpp"

#include <string>

#include "feedermads/errors.hpp"
#include "feedermads/evaluator.hpp"

namespace feedermads {

EnumerationResult enumerate_all(const NetworkModel& network,
                                const SolverOptions& options) {
  validate_network(network);
  const std::size_t n = network.switchable.size();
  if (n > 20) {
    throw ConfigError(
        "refusing to enumerate 2^" + std::to_string(n) +
        " configurations; the exhaustive oracle is capped at 20 switches");
  }

  EnumerationResult result;
  const std::uint64_t count = std::uint64_t{1} << n;
  result.trace.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t code = 0; code < count; ++code) {
    const SwitchVector x = from_index(code, n);
    const Metrics m = evaluate(network, x, options);
    const FilterDecision decision = result.frontier.insert(x, m);
    result.trace.push_back(
        TraceRecord{static_cast<int>(code) + 1, x, m, decision, -1,
                    static_cast<int>(result.frontier.size())});
  }
  return result;
}

}  // namespace feedermads
