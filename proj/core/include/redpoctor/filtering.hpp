#pragma once

#include <vector>

#include "redpoctor/errors.hpp"
#include "redpoctor/noise.hpp"
#include "redpoctor/types.hpp"

namespace redpoctor {

struct FilterConfig {
  bool enabled = true;
  int particle_count = 100;       // particles per bin
  double process_noise_std = 5.0; // random-walk step, in bpm

  void validate() const;
};

/// Bootstrap particle filter over a day-by-day histogram stream, one
/// independent filter per bin. Sampling days contribute posterior estimates
/// (predict + update), non-sampled days prior estimates (predict only).
///
/// The filter sees only released observations and their public noise scales;
/// it never reads raw data. Draws are consumed bin-major (all particles of
/// bin 0, then bin 1, ...), so a fixed seed reproduces a run exactly.
class ParticleFilter {
 public:
  ParticleFilter(int particle_count, double process_noise_std);

  bool initialized() const { return !particles_.empty(); }
  int particle_count() const { return particle_count_; }

  /// Seeds the per-bin particle clouds from the first sampled day's released
  /// observation, spreading particles with Laplace(obs_noise_scale) jitter
  /// (the observation model of that day).
  void initialize(const DayHistogram& observation, double obs_noise_scale,
                  NoiseSource& rng);

  /// Random-walk time update; returns the prior estimate (weighted particle
  /// mean per bin). Throws Uninitialized before initialize().
  DayHistogram predict(int day, NoiseSource& rng);

  /// Measurement update against the released observation of a sampling day:
  /// reweights by the Laplace likelihood at scale obs_noise_scale, normalizes,
  /// resamples systematically when the effective sample size drops below
  /// N/2, and returns the posterior estimate.
  ///
  /// If every likelihood of a bin underflows, that bin falls back to uniform
  /// weights and reports the raw observation (counted in
  /// degenerate_fallbacks()).
  DayHistogram update(const DayHistogram& observation, double obs_noise_scale,
                      NoiseSource& rng);

  int degenerate_fallbacks() const { return degenerate_fallbacks_; }

  /// Weighted particle spread of one bin; grows across consecutive predicts.
  double particle_variance(int bin) const;
  /// Weight vector of one bin (sums to 1).
  const std::vector<double>& weights(int bin) const;

 private:
  void ensure_initialized() const;

  int particle_count_;
  double process_noise_std_;
  int bin_width_minutes_ = 10;
  std::vector<std::vector<double>> particles_;  // [bin][particle]
  std::vector<std::vector<double>> weights_;    // [bin][particle]
  int degenerate_fallbacks_ = 0;
};

/// Pass-through stage used when filtering is disabled: prior estimates repeat
/// the last release, posterior estimates are the observation itself. Running
/// an experiment with the identity filter isolates the particle filter's
/// utility contribution.
class IdentityFilter {
 public:
  bool initialized() const { return initialized_; }

  void initialize(const DayHistogram& observation, double /*obs_noise_scale*/,
                  NoiseSource& /*rng*/) {
    last_ = observation;
    initialized_ = true;
  }

  DayHistogram predict(int day, NoiseSource& /*rng*/) {
    if (!initialized_) {
      throw Uninitialized("identity filter used before first sampled day");
    }
    DayHistogram out = last_;
    out.day = day;
    return out;
  }

  DayHistogram update(const DayHistogram& observation, double /*obs_noise_scale*/,
                      NoiseSource& /*rng*/) {
    if (!initialized_) {
      throw Uninitialized("identity filter used before first sampled day");
    }
    last_ = observation;
    return observation;
  }

 private:
  bool initialized_ = false;
  DayHistogram last_;
};

}  // namespace redpoctor
