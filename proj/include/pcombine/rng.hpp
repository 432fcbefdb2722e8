#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace pcombine {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xoshiro256++ with inverse-transform / Box-Muller variates.
//
// All draws go through integer state plus libm, never through
// std::*_distribution, so a (seed, stream) pair produces the same sequence
// on every platform and for any number of worker threads. Substreams are
// derived with splitmix64 so replicate r of a run is a fixed function of
// (seed, r) alone.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) { reseed(seed); }

  static RngStream substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t mix = seed;
    std::uint64_t z = splitmix64_next(mix);
    RngStream rng(z ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return rng;
  }

  void reseed(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64_next(sm);
    has_spare_ = false;
    spare_ = 0.0;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on the open interval (0,1); never returns an exact endpoint.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential() { return -std::log(uniform()); }

  double cauchy() { return std::tan(std::numbers::pi * (uniform() - 0.5)); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4] = {};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pcombine
