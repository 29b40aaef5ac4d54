#pragma once

#include <deque>
#include <utility>

#include "redpoctor/errors.hpp"
#include "redpoctor/types.hpp"

namespace redpoctor {

/// Eq.-7 composition of the health-condition term. The literal formula takes
/// the max of the error term and the health term; `kMin` is an alternative
/// under which a poor health condition can only shorten the interval.
enum class HealthTermComposition { kMax, kMin };

struct SamplerConfig {
  double theta_p = 0.8;  // proportional gain
  double theta_i = 0.2;  // integral gain
  double theta_d = 0.0;  // derivative gain
  double delta = 0.05;   // set point for the feedback error
  double eta = 2.0;      // interval adjustment scale
  int m = 3;             // how many sampling-day errors the integral term keeps

  void validate() const;
};

/// Pearson correlation between two released histograms, the sampling
/// feedback error. Both arguments must come from the released (post-noise)
/// path, never from raw data.
///
/// Degenerate inputs: two constant vectors correlate perfectly (1), exactly
/// one constant vector yields 0. Throws LengthMismatch on ragged inputs.
double pearson_feedback(const DayHistogram& prev_released,
                        const DayHistogram& curr_released);

/// PID sampling controller. Owned by one pipeline instance; all operations
/// are deterministic.
class SamplerState {
 public:
  explicit SamplerState(SamplerConfig config);

  const SamplerConfig& config() const { return config_; }
  int last_sample_day() const { return last_sample_day_; }
  int last_interval() const { return last_interval_; }
  int next_sample_day() const { return next_sample_day_; }
  const std::deque<std::pair<int, double>>& error_history() const {
    return error_history_;
  }

  /// True iff `day` is due for sampling. Day 1 is always sampled: no prior
  /// release exists to approximate from.
  bool should_sample(int day) const;

  /// Converts the feedback error E into the PID output
  ///   u = theta_p * e + theta_i * mean(stored errors) + theta_d * e / (day - last_sample_day)
  /// with e = |E - delta| / delta. Pushes e into the bounded error history
  /// (the mean includes the current error). Requires day > last_sample_day().
  double pid_error(double feedback, int day);

  /// Next sampling interval,
  ///   round(max{1, I + eta * (1 - (u/lambda)^2), I + eta * (1 - (c/lambda)^2)})
  /// with lambda = 1/eps_r. A zero remaining budget sends lambda to infinity
  /// and both adjustment terms to I + eta, stretching the interval so spent
  /// budget can fall out of the window. Rounds half up, result >= 1.
  int next_interval(double u, double c, double eps_r,
                    HealthTermComposition composition =
                        HealthTermComposition::kMax) const;

  /// Commits a sampling decision: `day` was sampled and the next sample is
  /// scheduled `interval` days later.
  void commit_sample(int day, int interval);

 private:
  SamplerConfig config_;
  std::deque<std::pair<int, double>> error_history_;
  int last_sample_day_ = 0;
  int last_interval_ = 1;
  int next_sample_day_ = 1;
};

}  // namespace redpoctor
