#include "redpoctor/features.hpp"

#include <algorithm>
#include <cmath>

#include "redpoctor/errors.hpp"

namespace redpoctor {

void FeatureThresholds::validate() const {
  if (!(hr_min < hr_max)) {
    throw Error("features.hr_min must be below features.hr_max");
  }
  if (!(n_r > 0.0 && n_g > 0.0 && n_h > 0.0 && n_l > 0.0)) {
    throw Error("feature tolerances must be > 0");
  }
  if (drift_window_bins < 1) {
    throw Error("features.drift_window_bins must be >= 1");
  }
}

HealthFeatures extract_features(const DayHistogram& released,
                                const FeatureThresholds& th) {
  HealthFeatures f;
  const auto& bins = released.bins;
  const int n = static_cast<int>(bins.size());

  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(bins[i + 1] - bins[i]) > th.rapid_jump) {
      ++f.h_r;
    }
  }

  const int window = th.drift_window_bins;
  for (int start = 0; start + window <= n; start += window) {
    const auto [lo, hi] =
        std::minmax_element(bins.begin() + start, bins.begin() + start + window);
    if (*hi - *lo > th.large_drift) {
      ++f.h_g;
    }
  }

  for (double v : bins) {
    if (v > th.hr_max) {
      ++f.h_h;
    }
    if (v < th.hr_min) {
      ++f.h_l;
    }
  }
  return f;
}

double health_condition(const HealthFeatures& f, const FeatureThresholds& th,
                        bool literal_max) {
  const double load = 0.25 * (f.h_r / th.n_r + f.h_g / th.n_g + f.h_h / th.n_h +
                              f.h_l / th.n_l);
  if (literal_max) {
    return std::max(load, 1.0);
  }
  return std::clamp(load, 0.0, 1.0);
}

}  // namespace redpoctor
