#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace funcpert {

// Deterministic random source. Uniform doubles are built from raw engine
// bits so a given seed reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform in [0, 1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // uniform w.r.t. area on the closed disk of the given radius
  std::complex<double> disk(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform());
    const double phi = 2.0 * pi() * uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  std::complex<double> unit_circle() {
    const double phi = 2.0 * pi() * uniform();
    return {std::cos(phi), std::sin(phi)};
  }

 private:
  static constexpr double pi() { return 3.141592653589793238462643383279502884; }
  std::mt19937_64 eng_;
};

// splitmix64 finalizer; used to derive independent per-trial seeds from a
// master seed so trials stay reproducible under any execution order.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix_seed(master ^ mix_seed(index + 1));
}

}  // namespace funcpert
