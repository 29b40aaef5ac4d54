#pragma once

#include <cstdint>
#include <string_view>

#include "redpoctor/types.hpp"

namespace redpoctor {

enum class Profile { kHealthy, kSick, kMixed };

/// Parses "healthy" | "sick" | "mixed"; throws Error otherwise.
Profile parse_profile(std::string_view name);
std::string_view profile_name(Profile profile);

/// Deterministic synthetic heart-rate stream.
///
/// Every day carries a circadian sinusoid between roughly 55 and 90 bpm plus
/// clamped AR(1) jitter; a healthy day stays strictly inside all default
/// feature thresholds, so its feature counts are zero by construction. Sick
/// days add spike pairs (rapid jumps), a sustained drift/plateau above
/// hr_max, and a bradycardia dip below hr_min, firing every feature. The
/// mixed profile alternates 7-day healthy and sick blocks.
StreamPrefix generate_synthetic(std::uint64_t seed, int days, Profile profile,
                                int bins_per_day = 144,
                                int bin_width_minutes = 10);

}  // namespace redpoctor
