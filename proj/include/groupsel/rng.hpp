#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>

namespace groupsel {

// Deterministic splitmix64 generator.  Distribution code is written out
// explicitly (instead of <random> adaptors) so that streams are bit-stable
// across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive integer range via rejection-free modulo (bias is negligible for
  // the small ranges used here, but rejection keeps it exact).
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~0ull - (~0ull % span);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x > limit);
    return lo + static_cast<int>(x % span);
  }

  // Standard normal via Box-Muller; the second deviate is cached.
  double normal() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    return r * std::cos(t);
  }

  // Complex standard normal, E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
  }

  // Independent child stream for per-trial seeding.
  Rng fork(std::uint64_t stream) {
    Rng child(state_ ^ (0xd1342543de82ef95ull * (stream + 1)));
    child.next_u64();
    return child;
  }

private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

}  // namespace groupsel
