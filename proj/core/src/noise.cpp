#include "redpoctor/noise.hpp"

#include <cmath>
#include <numbers>

namespace redpoctor {

double NoiseSource::laplace(double scale) {
  const double u = uniform01() - 0.5;  // in (-1/2, 1/2), never hits the ends
  const double sign = u >= 0.0 ? 1.0 : -1.0;
  return -scale * sign * std::log(1.0 - 2.0 * std::abs(u));
}

double NoiseSource::gaussian(double stddev) {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return stddev * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double laplace_sample(double scale, NoiseSource& rng) {
  if (!(scale > 0.0)) {
    throw NonPositiveBudget("laplace scale must be positive");
  }
  return rng.laplace(scale);
}

}  // namespace redpoctor
