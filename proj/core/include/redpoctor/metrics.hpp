#pragma once

#include <vector>

#include "redpoctor/types.hpp"

namespace redpoctor {

/// Utility summary of one run. `mae`/`mre` score the final released series;
/// the `pre_filter` pair scores the series before the filtering stage, so
/// filter ablations need no second run.
struct UtilityReport {
  int days = 0;
  double mae = 0.0;
  double mre = 0.0;
  double mae_pre_filter = 0.0;
  double mre_pre_filter = 0.0;
  std::vector<double> per_day_errors;  // per-day mean absolute error
  std::vector<double> budget_trace;    // per-day epsilon spend
  std::vector<int> sample_days;
};

/// Mean absolute error over all days and bins. Throws ShapeMismatch when the
/// two series disagree in day count or bin count.
double mae(const std::vector<DayHistogram>& released,
           const std::vector<DayHistogram>& truth);

/// Mean relative error with a per-day floor gamma = gamma_fraction * (sum of
/// that day's true bins): each bin contributes |released - truth| /
/// max(truth, gamma), damping the blow-up of near-empty bins.
double mre(const std::vector<DayHistogram>& released,
           const std::vector<DayHistogram>& truth, double gamma_fraction);

constexpr double kDefaultGammaFraction = 0.0005;  // 0.05% of the daily total

}  // namespace redpoctor
