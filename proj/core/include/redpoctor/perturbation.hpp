#pragma once

#include <utility>
#include <vector>

#include "redpoctor/noise.hpp"
#include "redpoctor/partition.hpp"
#include "redpoctor/types.hpp"

namespace redpoctor {

/// Randomizes bucket means with the Laplace mechanism and broadcasts each
/// noisy mean back over its bucket's bin range, reconstructing a full-length
/// histogram for `day`.
///
/// One draw of scale alpha / eps_perturb per bucket, not per bin: all bins of
/// a bucket receive the identical noisy value. `eps_perturb` is the
/// perturbation share of the day's budget, already multiplied out by the
/// caller. Throws NonPositiveBudget when eps_perturb <= 0.
DayHistogram perturb_buckets(const std::vector<std::pair<Bucket, double>>& means,
                             double alpha, double eps_perturb, int day,
                             int bin_width_minutes, NoiseSource& rng);

}  // namespace redpoctor
