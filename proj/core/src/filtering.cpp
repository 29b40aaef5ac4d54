#include "redpoctor/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace redpoctor {

void FilterConfig::validate() const {
  if (particle_count < 1) {
    throw Error("filter.particle_count must be >= 1");
  }
  if (!(process_noise_std > 0.0)) {
    throw Error("filter.process_noise_std must be > 0");
  }
}

ParticleFilter::ParticleFilter(int particle_count, double process_noise_std)
    : particle_count_(particle_count), process_noise_std_(process_noise_std) {
  FilterConfig cfg{true, particle_count, process_noise_std};
  cfg.validate();
}

void ParticleFilter::ensure_initialized() const {
  if (!initialized()) {
    throw Uninitialized("particle filter used before first sampled day");
  }
}

void ParticleFilter::initialize(const DayHistogram& observation,
                                double obs_noise_scale, NoiseSource& rng) {
  const auto n_bins = observation.bins.size();
  bin_width_minutes_ = observation.bin_width_minutes;
  particles_.assign(n_bins, std::vector<double>(particle_count_));
  weights_.assign(n_bins, std::vector<double>(
                              particle_count_,
                              1.0 / static_cast<double>(particle_count_)));
  for (std::size_t bin = 0; bin < n_bins; ++bin) {
    for (int j = 0; j < particle_count_; ++j) {
      particles_[bin][j] = observation.bins[bin] + rng.laplace(obs_noise_scale);
    }
  }
}

DayHistogram ParticleFilter::predict(int day, NoiseSource& rng) {
  ensure_initialized();
  DayHistogram estimate{day, std::vector<double>(particles_.size()),
                        bin_width_minutes_};
  for (std::size_t bin = 0; bin < particles_.size(); ++bin) {
    double mean = 0.0;
    for (int j = 0; j < particle_count_; ++j) {
      particles_[bin][j] += rng.gaussian(process_noise_std_);
      mean += weights_[bin][j] * particles_[bin][j];
    }
    estimate.bins[bin] = mean;
  }
  return estimate;
}

DayHistogram ParticleFilter::update(const DayHistogram& observation,
                                    double obs_noise_scale, NoiseSource& rng) {
  ensure_initialized();
  if (observation.bins.size() != particles_.size()) {
    throw LengthMismatch("filter_update: observation has wrong bin count");
  }
  const double n = static_cast<double>(particle_count_);
  DayHistogram estimate{observation.day,
                        std::vector<double>(particles_.size()),
                        bin_width_minutes_};
  for (std::size_t bin = 0; bin < particles_.size(); ++bin) {
    auto& w = weights_[bin];
    auto& p = particles_[bin];

    // Laplace log-likelihood, shifted by its max before exponentiating so a
    // far-off observation cannot underflow every weight at once.
    std::vector<double> log_w(p.size());
    double max_lw = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < particle_count_; ++j) {
      const double ll = -std::abs(observation.bins[bin] - p[j]) / obs_noise_scale;
      log_w[j] = std::log(w[j]) + ll;
      max_lw = std::max(max_lw, log_w[j]);
    }
    double norm = 0.0;
    if (std::isfinite(max_lw)) {
      for (int j = 0; j < particle_count_; ++j) {
        w[j] = std::exp(log_w[j] - max_lw);
        norm += w[j];
      }
    }
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      // Degenerate weights: keep the raw observation for this bin.
      ++degenerate_fallbacks_;
      std::fill(w.begin(), w.end(), 1.0 / n);
      estimate.bins[bin] = observation.bins[bin];
      continue;
    }
    for (double& wj : w) {
      wj /= norm;
    }

    double ess_denom = 0.0;
    for (double wj : w) {
      ess_denom += wj * wj;
    }
    if (1.0 / ess_denom < n / 2.0) {
      // Systematic resampling; all weights return to 1/N.
      std::vector<double> resampled(p.size());
      const double step = 1.0 / n;
      double u = rng.uniform01() * step;
      double cumulative = w[0];
      int src = 0;
      for (int j = 0; j < particle_count_; ++j) {
        while (u > cumulative && src + 1 < particle_count_) {
          ++src;
          cumulative += w[src];
        }
        resampled[j] = p[src];
        u += step;
      }
      p = std::move(resampled);
      std::fill(w.begin(), w.end(), 1.0 / n);
    }

    double mean = 0.0;
    for (int j = 0; j < particle_count_; ++j) {
      mean += w[j] * p[j];
    }
    estimate.bins[bin] = mean;
  }
  return estimate;
}

double ParticleFilter::particle_variance(int bin) const {
  ensure_initialized();
  const auto& p = particles_[static_cast<std::size_t>(bin)];
  const auto& w = weights_[static_cast<std::size_t>(bin)];
  double mean = 0.0;
  for (int j = 0; j < particle_count_; ++j) {
    mean += w[j] * p[j];
  }
  double var = 0.0;
  for (int j = 0; j < particle_count_; ++j) {
    var += w[j] * (p[j] - mean) * (p[j] - mean);
  }
  return var;
}

const std::vector<double>& ParticleFilter::weights(int bin) const {
  ensure_initialized();
  return weights_[static_cast<std::size_t>(bin)];
}

}  // namespace redpoctor
