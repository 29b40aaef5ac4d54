#include "redpoctor/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace redpoctor {

void PartitionThresholds::validate() const {
  if (!(t_d > 0.0) || !(t_r > 0.0)) {
    throw Error("partition thresholds must be > 0");
  }
  if (t_r > t_d) {
    throw Error("partition.t_r must not exceed partition.t_d");
  }
  if (t_s < 1) {
    throw Error("partition.t_s must be >= 1");
  }
}

int BucketSet::total_bins() const {
  int total = 0;
  for (const auto& b : buckets) {
    total += b.size();
  }
  return total;
}

std::pair<double, double> noisy_thresholds(const PartitionThresholds& thresholds,
                                           double eps_partition, double alpha,
                                           NoiseSource& rng) {
  if (!(eps_partition > 0.0)) {
    throw NonPositiveBudget("partition budget must be > 0");
  }
  if (!(alpha > 0.0)) {
    throw Error("sensitivity alpha must be > 0");
  }
  constexpr double kFloor = 0.1;
  const double scale = alpha / (eps_partition / 2.0);
  const double t_hat_d = thresholds.t_d + rng.laplace(scale);
  const double t_hat_r = thresholds.t_r + rng.laplace(scale);
  return {std::max(kFloor, t_hat_d), std::max(kFloor, t_hat_r)};
}

namespace {

class BucketBuilder {
 public:
  void open(int index, double value) {
    start_ = index;
    values_.assign(1, value);
    min_ = max_ = value;
  }

  /// Whether `value` may join without breaking the spread or size bounds.
  bool accepts(double value, double t_hat_d, int t_s) const {
    const double lo = std::min(min_, value);
    const double hi = std::max(max_, value);
    return hi - lo <= t_hat_d && static_cast<int>(values_.size()) + 1 <= t_s;
  }

  void push(int /*index*/, double value) {
    values_.push_back(value);
    min_ = std::min(min_, value);
    max_ = std::max(max_, value);
  }

  bool empty() const { return values_.empty(); }
  int size() const { return static_cast<int>(values_.size()); }

  Bucket close() {
    Bucket b{start_, start_ + static_cast<int>(values_.size()) - 1,
             std::move(values_)};
    values_.clear();
    return b;
  }

  /// Closes everything but the last bin, returning (head, last-bin singleton).
  std::pair<Bucket, Bucket> close_splitting_last() {
    const int n = static_cast<int>(values_.size());
    Bucket tail{start_ + n - 1, start_ + n - 1, {values_.back()}};
    values_.pop_back();
    Bucket head = close();
    return {std::move(head), std::move(tail)};
  }

 private:
  int start_ = 0;
  double min_ = 0.0;
  double max_ = 0.0;
  std::vector<double> values_;
};

}  // namespace

BucketSet dp_partition(const DayHistogram& hist, double t_hat_d, double t_hat_r,
                       int t_s) {
  BucketSet out;
  const auto& bins = hist.bins;
  if (bins.empty()) {
    return out;
  }

  BucketBuilder current;
  current.open(0, bins[0]);
  double prev = bins[0];

  for (int i = 1; i < static_cast<int>(bins.size()); ++i) {
    const double d = bins[i];
    if (std::abs(prev - d) > t_hat_r) {
      // Rapid change: both jump endpoints end up in single-bin buckets so
      // their values are not averaged later.
      if (current.size() > 1) {
        auto [head, tail] = current.close_splitting_last();
        out.buckets.push_back(std::move(head));
        out.buckets.push_back(std::move(tail));
      } else if (!current.empty()) {
        out.buckets.push_back(current.close());
      }
      out.buckets.push_back(Bucket{i, i, {d}});
      // The next bucket starts after the isolated bin.
    } else if (!current.empty() && current.accepts(d, t_hat_d, t_s)) {
      current.push(i, d);
    } else {
      if (!current.empty()) {
        out.buckets.push_back(current.close());
      }
      current.open(i, d);
    }
    prev = d;
  }
  if (!current.empty()) {
    out.buckets.push_back(current.close());
  }
  return out;
}

std::vector<std::pair<Bucket, double>> bucket_means(const BucketSet& bset) {
  std::vector<std::pair<Bucket, double>> out;
  out.reserve(bset.buckets.size());
  for (const auto& b : bset.buckets) {
    const double sum = std::accumulate(b.values.begin(), b.values.end(), 0.0);
    out.emplace_back(b, sum / static_cast<double>(b.values.size()));
  }
  return out;
}

}  // namespace redpoctor
