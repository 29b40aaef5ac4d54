#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "redpoctor/errors.hpp"
#include "redpoctor/types.hpp"

namespace redpoctor {

/// Seeded noise source. Identical seeds yield identical draw sequences, so a
/// single 64-bit seed reproduces an entire experiment.
///
/// Uniform variates are derived from the raw mt19937_64 output rather than
/// std::uniform_real_distribution, whose mapping is implementation-defined;
/// draw sequences are therefore stable across standard libraries.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform draw strictly inside (0, 1), 53-bit resolution.
  double uniform01() {
    const std::uint64_t bits = engine_() >> 11;  // top 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  /// One draw from Laplace(0, scale) via inverse CDF:
  /// u uniform in (-1/2, 1/2), return -scale * sign(u) * ln(1 - 2|u|).
  double laplace(double scale);

  /// One draw from Normal(0, stddev) via Box-Muller. Consumes two uniforms.
  double gaussian(double stddev);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Free-function form of the Laplace draw; `scale` must be > 0.
double laplace_sample(double scale, NoiseSource& rng);

/// Sensitivity of the per-day histogram query. The default follows the public
/// heart-rate range 50-200 bpm spread over a 14-day window; it is a fixed
/// configuration constant, never derived from the data being released.
struct SensitivitySpec {
  double alpha = 150.0 / 14.0;
};

}  // namespace redpoctor
