#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pukgc {

// Seeded random source. Uniform/gaussian transforms are hand-rolled on top of
// mt19937_64 so that streams are identical across standard library
// implementations, which keeps checkpoints byte-for-byte reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via Box-Muller; the sine branch is discarded so one
  // gaussian always consumes exactly two engine draws.
  double gaussian() {
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Derives an independent stream, e.g. one per worker.
  Rng spawn(std::uint64_t stream_id) {
    return Rng(engine_() ^ (0x9E3779B97F4A7C15ull * (stream_id + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pukgc
