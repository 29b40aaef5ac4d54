#include "redpoctor/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "redpoctor/errors.hpp"

namespace redpoctor {

namespace {

void check_shapes(const std::vector<DayHistogram>& released,
                  const std::vector<DayHistogram>& truth) {
  if (released.size() != truth.size()) {
    throw ShapeMismatch("released and truth differ in day count");
  }
  for (std::size_t i = 0; i < released.size(); ++i) {
    if (released[i].bins.size() != truth[i].bins.size()) {
      throw ShapeMismatch("released and truth differ in bin count at day " +
                          std::to_string(truth[i].day));
    }
  }
}

}  // namespace

double mae(const std::vector<DayHistogram>& released,
           const std::vector<DayHistogram>& truth) {
  check_shapes(released, truth);
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t d = 0; d < truth.size(); ++d) {
    for (std::size_t i = 0; i < truth[d].bins.size(); ++i) {
      sum += std::abs(released[d].bins[i] - truth[d].bins[i]);
    }
    count += truth[d].bins.size();
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double mre(const std::vector<DayHistogram>& released,
           const std::vector<DayHistogram>& truth, double gamma_fraction) {
  check_shapes(released, truth);
  if (!(gamma_fraction > 0.0)) {
    throw Error("gamma_fraction must be > 0");
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t d = 0; d < truth.size(); ++d) {
    const double day_total = std::accumulate(truth[d].bins.begin(),
                                             truth[d].bins.end(), 0.0);
    // An all-zero truth day would zero the floor too; fall back to absolute
    // error there instead of dividing by zero.
    const double gamma = day_total > 0.0 ? gamma_fraction * day_total : 1.0;
    for (std::size_t i = 0; i < truth[d].bins.size(); ++i) {
      const double denom = std::max(truth[d].bins[i], gamma);
      sum += std::abs(released[d].bins[i] - truth[d].bins[i]) / denom;
    }
    count += truth[d].bins.size();
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace redpoctor
