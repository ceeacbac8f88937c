#pragma once

// Counter-based random streams. Substreams are derived from a master seed
// plus a small key tuple (purpose tag, round, particle index, ...) so that
// every parallel unit of work owns an independent generator and results do
// not depend on worker scheduling. Core generator is xoshiro256**; samplers
// are self-contained so that runs reproduce bit-exactly for a fixed seed.

#include <array>
#include <cmath>
#include <cstdint>

namespace mfuq {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Purpose tags for substream derivation. Distinct tags keep streams used by
// different stages of the pipeline from colliding under one master seed.
namespace streams {
inline constexpr std::uint64_t init = 0xA1;
inline constexpr std::uint64_t rejuvenate = 0xA2;
inline constexpr std::uint64_t resample = 0xA3;
inline constexpr std::uint64_t query = 0xA4;
inline constexpr std::uint64_t pairs = 0xA5;
inline constexpr std::uint64_t pi_x = 0xA6;
inline constexpr std::uint64_t shuffle = 0xA7;
inline constexpr std::uint64_t fields = 0xA8;
}  // namespace streams

class RngStream {
 public:
  RngStream() { seed(0); }
  explicit RngStream(std::uint64_t s) { seed(s); }

  void seed(std::uint64_t s) {
    std::uint64_t sm = s;
    for (auto& w : state_) w = splitmix64(sm);
  }

  static RngStream derive(std::uint64_t master, std::uint64_t k1,
                          std::uint64_t k2 = 0, std::uint64_t k3 = 0,
                          std::uint64_t k4 = 0) {
    std::uint64_t s = master;
    for (std::uint64_t k : {k1, k2, k3, k4}) {
      s ^= k + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
      std::uint64_t t = s;
      s = splitmix64(t);
    }
    return RngStream(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // uniform on [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on (0,1)
  double uniform_open() {
    double u;
    do {
      u = uniform();
    } while (u == 0.0);
    return u;
  }

  double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::size_t uniform_index(std::size_t n) {
    const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  double normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    const double a = 6.2831853071795864769 * uniform();
    return r * std::cos(a);
  }

  double exponential(double mean) { return -mean * std::log(uniform_open()); }

  // Marsaglia-Tsang; shape/rate parameterization.
  double gamma(double shape, double rate) {
    if (shape < 1.0) {
      const double boost = std::pow(uniform_open(), 1.0 / shape);
      return gamma(shape + 1.0, rate) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
  }

  std::array<std::uint64_t, 4> state() const { return state_; }
  void set_state(const std::array<std::uint64_t, 4>& s) { state_ = s; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace mfuq
