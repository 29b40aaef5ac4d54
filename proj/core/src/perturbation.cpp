#include "redpoctor/perturbation.hpp"

namespace redpoctor {

DayHistogram perturb_buckets(const std::vector<std::pair<Bucket, double>>& means,
                             double alpha, double eps_perturb, int day,
                             int bin_width_minutes, NoiseSource& rng) {
  if (!(eps_perturb > 0.0)) {
    throw NonPositiveBudget("perturbation budget must be > 0");
  }
  int total = 0;
  for (const auto& [bucket, mean] : means) {
    total += bucket.size();
  }
  DayHistogram out{day, std::vector<double>(static_cast<std::size_t>(total)),
                   bin_width_minutes};
  const double scale = alpha / eps_perturb;
  for (const auto& [bucket, mean] : means) {
    const double noisy = mean + rng.laplace(scale);
    for (int i = bucket.start; i <= bucket.end; ++i) {
      out.bins[static_cast<std::size_t>(i)] = noisy;
    }
  }
  return out;
}

}  // namespace redpoctor
