#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace orthobo {

namespace detail {

// SplitMix64 step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Deterministic random stream: a seeded mt19937_64 plus a call counter.
// Identical seed and call sequence reproduce identical outputs; derived
// streams (fork) depend only on the parent seed, never on the counter.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : seed_(seed), counter_(0), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() {
    ++counter_;
    return engine_();
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; two uniforms consumed per draw so the
  // call sequence stays independent of any cached spare.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Independent child stream keyed by id; reproducible from (seed, id) alone.
  RngState fork(std::uint64_t stream_id) const {
    std::uint64_t s = seed_ ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    return RngState(detail::splitmix64(s));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
  std::mt19937_64 engine_;
};

}  // namespace orthobo
