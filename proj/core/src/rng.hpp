#pragma once

// Internal: splitmix64 substreams and the polar-method normal generator.
// Not installed; the deterministic substream derivation here is part of the
// sampling module's reproducibility contract.

#include <cmath>
#include <cstdint>

namespace helmert::detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  return mix64(state);
}

// Initial generator state for one chunk of trials. Runs the chunk index
// through the finalizer twice so adjacent chunks start far apart in the
// underlying counter sequence.
inline std::uint64_t substream_state(std::uint64_t seed, std::uint64_t chunk) {
  return mix64(mix64(seed ^ 0x6A09E667F3BCC909ULL) +
               (chunk + 1) * 0x9E3779B97F4A7C15ULL);
}

class UniformStream {
 public:
  explicit UniformStream(std::uint64_t state) : state_(state) {}
  // [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(splitmix64_next(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Marsaglia polar method with the usual cached second deviate.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t state) : uniforms_(state) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniforms_.next_unit() - 1.0;
      v = 2.0 * uniforms_.next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

 private:
  UniformStream uniforms_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace helmert::detail
