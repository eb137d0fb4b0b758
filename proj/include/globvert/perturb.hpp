#pragma once

#include <cstdint>

#include <globvert/contour.hpp>

namespace globvert {

enum class SidePolicy { alternate, interior, exterior, random };

struct NoiseConfig {
  double rho = 0.8;       // insertion radius as a multiple of the segment length; > 0.5
  int iterations = 1;     // point count doubles per pass, capped at 6
  SidePolicy side = SidePolicy::alternate;
  uint64_t seed = 0;      // only the random policy reads it
};

/// One additive noising pass: between each consecutive pair of boundary points
/// a new point is inserted at the intersection of the two circles of radius
/// rho * d centered on them, offset h = d * sqrt(rho^2 - 1/4) from the segment
/// midpoint on the side the policy picks. The original points survive verbatim
/// at even indices of the output.
ClosedContour noising_step(const ClosedContour& contour, const NoiseConfig& config);

/// Applies noising_step `iterations` times. Deterministic for the non-random
/// policies, and for the random policy under a fixed seed.
ClosedContour noising(const ClosedContour& contour, const NoiseConfig& config);

/// Baseline: circular moving average of the coordinates (`passes` times),
/// followed by uniform resampling at the same sample count. Window must be
/// odd; window 1 is the identity.
ClosedContour smooth(const ClosedContour& contour, int window, int passes);

}  // namespace globvert
