#pragma once

#include <optional>
#include <vector>

#include "redpoctor/errors.hpp"

namespace redpoctor {

/// One day of heart-rate data aggregated into fixed-width time bins.
/// The default aggregation is 10 minutes, i.e. 144 bins per day; tests use
/// much smaller histograms, so the bin count is never hard-coded.
struct DayHistogram {
  int day = 0;
  std::vector<double> bins;
  int bin_width_minutes = 10;

  bool operator==(const DayHistogram&) const = default;
};

/// Stream prefix: histograms for days 1..t in order.
struct StreamPrefix {
  std::vector<DayHistogram> histograms;

  bool empty() const { return histograms.empty(); }
  int days() const { return static_cast<int>(histograms.size()); }
  int bins_per_day() const {
    return histograms.empty() ? 0
                              : static_cast<int>(histograms.front().bins.size());
  }

  bool operator==(const StreamPrefix&) const = default;
};

/// Per-day output of the release engine.
///
/// `released` may contain negative bins: Laplace noise is left unclamped on
/// the internal feedback path and clamped to >= 0 only when a report is
/// exported.
struct ReleaseRecord {
  int day = 0;
  DayHistogram released;
  bool sampled = false;
  double epsilon_spent = 0.0;
  int interval_next = 1;
  double health_condition = 0.0;
  std::optional<int> bucket_count;  // present iff sampled

  bool operator==(const ReleaseRecord&) const = default;
};

/// Checks stream invariants and returns the prefix unchanged.
///
/// Throws NonConsecutiveDays, RaggedBins or NegativeCount naming the
/// offending day. Day indices must run 1,2,3,... and every histogram must
/// share the bin count and bin width of the first one.
const StreamPrefix& validate_stream(const StreamPrefix& prefix);

}  // namespace redpoctor
