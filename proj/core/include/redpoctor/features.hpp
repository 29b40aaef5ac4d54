#pragma once

#include "redpoctor/types.hpp"

namespace redpoctor {

/// Event thresholds of the four rhythm features and their tolerances.
/// Defaults are illustrative, not clinical.
struct FeatureThresholds {
  double rapid_jump = 30.0;   // adjacent-bin change counting toward h_r
  double large_drift = 50.0;  // spread over a drift window counting toward h_g
  int drift_window_bins = 12; // 2 hours at 10-minute bins
  double hr_max = 100.0;      // bins above count toward h_h
  double hr_min = 50.0;       // bins below count toward h_l
  double n_r = 3.0;           // tolerances normalizing each feature
  double n_g = 2.0;
  double n_h = 12.0;
  double n_l = 12.0;

  void validate() const;
};

/// Feature counts of one released day plus the health-condition score.
struct HealthFeatures {
  int h_r = 0;  // rapid adjacent-bin changes
  int h_g = 0;  // drift windows with large spread
  int h_h = 0;  // bins above hr_max
  int h_l = 0;  // bins below hr_min
  double c = 0.0;
};

/// Counts the four rhythm events on a released histogram. h_g scans
/// non-overlapping, aligned windows of drift_window_bins so one drift event
/// is not double-counted. Operates on released data only; extraction costs
/// no privacy budget.
HealthFeatures extract_features(const DayHistogram& released,
                                const FeatureThresholds& th);

/// Health-condition score from normalized feature loads,
///   c = (h_r/n_r + h_g/n_g + h_h/n_h + h_l/n_l) / 4,
/// clamped into [0, 1]. The printed formula caps with max, which would pin c
/// at >= 1 always; `literal_max` reproduces that variant for fidelity
/// experiments.
double health_condition(const HealthFeatures& f, const FeatureThresholds& th,
                        bool literal_max = false);

}  // namespace redpoctor
