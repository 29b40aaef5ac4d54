#pragma once

#include <utility>
#include <vector>

#include "redpoctor/errors.hpp"
#include "redpoctor/noise.hpp"
#include "redpoctor/types.hpp"

namespace redpoctor {

/// Pattern-preserving partition thresholds.
struct PartitionThresholds {
  double t_d = 30.0;  // max spread (max - min) inside one bucket
  double t_r = 15.0;  // max jump between adjacent bins
  int t_s = 4;        // max bucket size in bins

  /// t_r must not exceed t_d and all thresholds must be positive.
  void validate() const;
};

/// Contiguous run of bins [start, end] and their values.
struct Bucket {
  int start = 0;
  int end = 0;  // inclusive
  std::vector<double> values;

  int size() const { return end - start + 1; }
  bool operator==(const Bucket&) const = default;
};

/// Ordered, contiguous, non-overlapping partition covering every bin exactly
/// once.
struct BucketSet {
  std::vector<Bucket> buckets;

  int total_bins() const;
  bool operator==(const BucketSet&) const = default;
};

/// Draws the privacy-protected thresholds (T_D + Z, T_R + Z') with Z, Z'
/// independent Laplace draws of scale alpha / (eps_partition / 2); the
/// partition budget is split evenly between the two thresholds. Both noisy
/// thresholds are floored at 0.1 so a large negative draw cannot force an
/// all-singleton partition; flooring is post-processing of the noisy value
/// and costs nothing.
std::pair<double, double> noisy_thresholds(const PartitionThresholds& thresholds,
                                           double eps_partition, double alpha,
                                           NoiseSource& rng);

/// Single left-to-right pass over the day's bins.
///
/// A jump above t_hat_r between adjacent bins isolates both endpoints in
/// single-bin buckets so their values are never averaged away; otherwise a
/// bin extends the current bucket while the spread stays within t_hat_d and
/// the size within t_s, and starts a new bucket when either bound would
/// break.
BucketSet dp_partition(const DayHistogram& hist, double t_hat_d, double t_hat_r,
                       int t_s);

/// Arithmetic mean per bucket, in bucket order.
std::vector<std::pair<Bucket, double>> bucket_means(const BucketSet& bset);

}  // namespace redpoctor
