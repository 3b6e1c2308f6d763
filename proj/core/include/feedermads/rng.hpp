/**
 * @file rng.hpp
 * @brief Deterministic random primitives with cross-platform stable streams.
 *
 * Raw mt19937_64 output is fully specified by the standard, so every draw
 * here is reproducible across compilers and standard libraries. Distribution
 * shaping (bounded draws, shuffles) is done by hand for the same reason:
 * std::uniform_int_distribution and std::shuffle are not portable.
 */

#ifndef FEEDERMADS_RNG_HPP
#define FEEDERMADS_RNG_HPP

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace feedermads {

/// Seeded 64-bit generator with unbiased bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw in [0, bound) via rejection sampling; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    assert(bound > 0);
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (kMax % bound + 1) % bound;
    const std::uint64_t zone = kMax - rem;
    std::uint64_t raw = next_u64();
    while (raw > zone) raw = next_u64();
    return raw % bound;
  }

  /// Uniform bit, one engine draw per call.
  std::uint64_t next_bit() { return next_below(2); }

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle driven by the portable generator.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

/// Mixes a base seed with a stream index into an independent sub-seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace feedermads

#endif  // FEEDERMADS_RNG_HPP
