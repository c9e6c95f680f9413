#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace pricelab {

/// Deterministic random stream (xoshiro256++). Streams derived from the same
/// seed with different stream ids are independent for practical purposes, and
/// the full generator state is four words, so it serializes into checkpoints.
struct Rng {
  std::array<std::uint64_t, 4> state{1, 2, 3, 4};

  static constexpr std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static Rng from_seed(std::uint64_t seed, std::uint64_t stream = 0) {
    Rng r;
    std::uint64_t x = seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    for (auto& s : r.state) s = splitmix64(x);
    if (r.state[0] == 0 && r.state[1] == 0 && r.state[2] == 0 && r.state[3] == 0)
      r.state[0] = 0x9E3779B97F4A7C15ULL;
    return r;
  }

  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state[0] + state[3], 23) + state[0];
    const std::uint64_t t = state[1] << 17;
    state[2] ^= state[0];
    state[3] ^= state[1];
    state[1] ^= state[2];
    state[0] ^= state[3];
    state[2] ^= t;
    state[3] = rotl(state[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1), both endpoints excluded.
  double uniform_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform in (-1, 1), endpoints excluded.
  double uniform_pm1() { return 2.0 * uniform_open() - 1.0; }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// Standard normal via Box-Muller (cacheless; two uniforms per draw).
  double normal() {
    const double u1 = uniform_open();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }
};

}  // namespace pricelab
