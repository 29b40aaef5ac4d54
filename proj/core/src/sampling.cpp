#include "redpoctor/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace redpoctor {

void SamplerConfig::validate() const {
  if (!(delta > 0.0)) {
    throw Error("sampler.delta must be > 0");
  }
  if (!(eta > 0.0)) {
    throw Error("sampler.eta must be > 0");
  }
  if (m < 1) {
    throw Error("sampler.m must be >= 1");
  }
}

double pearson_feedback(const DayHistogram& prev_released,
                        const DayHistogram& curr_released) {
  const auto& x = curr_released.bins;
  const auto& y = prev_released.bins;
  if (x.size() != y.size()) {
    throw LengthMismatch("pearson_feedback: histograms have different lengths");
  }
  const auto n = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;

  double cov = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  const bool x_constant = var_x == 0.0;
  const bool y_constant = var_y == 0.0;
  if (x_constant && y_constant) {
    return 1.0;
  }
  if (x_constant || y_constant) {
    return 0.0;
  }
  const double rho = cov / (std::sqrt(var_x) * std::sqrt(var_y));
  return std::clamp(rho, -1.0, 1.0);
}

SamplerState::SamplerState(SamplerConfig config) : config_(config) {
  config_.validate();
}

bool SamplerState::should_sample(int day) const {
  return day == 1 || day >= next_sample_day_;
}

double SamplerState::pid_error(double feedback, int day) {
  if (day <= last_sample_day_) {
    throw Error("pid_error: day must be after the last sample day");
  }
  const double e = std::abs(feedback - config_.delta) / config_.delta;
  error_history_.emplace_back(day, e);
  while (static_cast<int>(error_history_.size()) > config_.m) {
    error_history_.pop_front();
  }

  double sum = 0.0;
  for (const auto& [d, err] : error_history_) {
    sum += err;
  }
  const double integral = sum / static_cast<double>(error_history_.size());
  const double derivative = e / static_cast<double>(day - last_sample_day_);
  return config_.theta_p * e + config_.theta_i * integral +
         config_.theta_d * derivative;
}

int SamplerState::next_interval(double u, double c, double eps_r,
                                HealthTermComposition composition) const {
  const double prev = static_cast<double>(last_interval_);
  // eps_r == 0 gives lambda = +inf; both squared ratios collapse to 0 and the
  // interval grows by eta.
  const double lambda = 1.0 / eps_r;
  const double u_ratio = u / lambda;
  const double c_ratio = c / lambda;
  const double error_term = prev + config_.eta * (1.0 - u_ratio * u_ratio);
  const double health_term = prev + config_.eta * (1.0 - c_ratio * c_ratio);
  const double combined = composition == HealthTermComposition::kMax
                              ? std::max(error_term, health_term)
                              : std::min(error_term, health_term);
  const double interval = std::max(1.0, combined);
  return static_cast<int>(std::max(1.0, std::floor(interval + 0.5)));
}

void SamplerState::commit_sample(int day, int interval) {
  if (interval < 1) {
    throw Error("sampling interval must be >= 1");
  }
  last_sample_day_ = day;
  last_interval_ = interval;
  next_sample_day_ = day + interval;
}

}  // namespace redpoctor
