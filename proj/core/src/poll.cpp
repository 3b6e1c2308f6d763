#include "feedermads/poll.hpp"

#include <string>

#include "feedermads/errors.hpp"
#include "feedermads/rng.hpp"

namespace feedermads {
namespace {

std::vector<PollPoint> unit_poll_set(const SwitchVector& x_k) {
  const std::size_t n = x_k.size();
  std::vector<PollPoint> points;
  points.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int sign : {+1, -1}) {
      PollPoint p;
      p.direction = sign * static_cast<int>(i + 1);
      p.point.assign(x_k.begin(), x_k.end());
      p.point[i] += sign;
      p.valid = p.point[i] == 0 || p.point[i] == 1;
      p.discarded = !p.valid;
      points.push_back(std::move(p));
    }
  }
  return points;
}

// All points at Hamming distance exactly `radius`, flip sets in
// lexicographic order of their index tuples.
std::vector<PollPoint> shell_poll_set(const SwitchVector& x_k, int radius) {
  const int n = static_cast<int>(x_k.size());
  std::vector<PollPoint> points;
  std::vector<int> flips(static_cast<std::size_t>(radius));
  for (int i = 0; i < radius; ++i) flips[static_cast<std::size_t>(i)] = i;
  while (true) {
    PollPoint p;
    p.point.assign(x_k.begin(), x_k.end());
    for (int i : flips) {
      p.point[static_cast<std::size_t>(i)] = 1 - p.point[static_cast<std::size_t>(i)];
    }
    p.valid = true;
    points.push_back(std::move(p));

    int k = radius - 1;
    while (k >= 0 && flips[static_cast<std::size_t>(k)] == n - radius + k) --k;
    if (k < 0) break;
    ++flips[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < radius; ++j) {
      flips[static_cast<std::size_t>(j)] = flips[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return points;
}

}  // namespace

std::vector<PollPoint> generate_poll_set(const SwitchVector& x_k,
                                         PollOrder order,
                                         std::uint64_t seed,
                                         int radius) {
  const int n = static_cast<int>(x_k.size());
  if (radius < 1) {
    throw ConfigError("poll radius must be >= 1, got " + std::to_string(radius));
  }
  if (radius > n) {
    throw ConfigError("poll radius " + std::to_string(radius) +
                      " exceeds dimension " + std::to_string(n) +
                      ": no neighbors at that distance");
  }

  std::vector<PollPoint> points =
      radius == 1 ? unit_poll_set(x_k) : shell_poll_set(x_k, radius);
  if (order == PollOrder::SeededRandom) {
    Rng rng(seed);
    shuffle(points, rng);
  }
  return points;
}

}  // namespace feedermads
