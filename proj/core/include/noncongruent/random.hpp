#pragma once

#include <cstdint>
#include <random>

namespace noncongruent {

// 64-bit Mersenne twister with a portable uniform-real conversion, so that a
// given seed produces the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in the open interval (lo, hi); redraws the (measure-zero) endpoint.
  double uniform_open(double lo, double hi) {
    for (;;) {
      const double v = lo + (hi - lo) * uniform();
      if (v > lo && v < hi) return v;
    }
  }

  std::uint64_t next() { return engine_(); }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace noncongruent
