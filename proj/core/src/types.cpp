#include "redpoctor/types.hpp"

#include <cmath>

namespace redpoctor {

const StreamPrefix& validate_stream(const StreamPrefix& prefix) {
  if (prefix.histograms.empty()) {
    return prefix;
  }
  const auto& first = prefix.histograms.front();
  const auto expected_bins = first.bins.size();
  int expected_day = 1;
  for (const auto& hist : prefix.histograms) {
    if (hist.day != expected_day) {
      throw NonConsecutiveDays(hist.day);
    }
    if (hist.bins.empty() || hist.bins.size() != expected_bins ||
        hist.bin_width_minutes != first.bin_width_minutes) {
      throw RaggedBins(hist.day);
    }
    for (double v : hist.bins) {
      if (!std::isfinite(v) || v < 0.0) {
        throw NegativeCount(hist.day);
      }
    }
    ++expected_day;
  }
  return prefix;
}

}  // namespace redpoctor
