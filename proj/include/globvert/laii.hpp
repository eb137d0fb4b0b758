#pragma once

#include <Eigen/Core>

#include <globvert/raster.hpp>
#include <globvert/vertices.hpp>

namespace globvert {

/// Local area integral invariant: for each boundary sample, the fraction of a
/// fixed-radius disk centered there that lies inside the shape. Flat boundary
/// gives 0.5, convex bends less, concave bends more.
struct LaiiProfile {
  Eigen::ArrayXd fraction;
  int radius = 15;
  int raster_width = 0;
  int raster_height = 0;
  long disk_pixels = 0;
};

/// Disk-count fractions at the given sample positions (continuous pixel
/// coordinates). Pixels beyond the raster count as background.
LaiiProfile laii_profile(const Raster& raster, const Points& samples_px, int radius);

/// Strict local extrema of the fraction within +/- window samples (circular).
/// Minima are convex picks, maxima concave. Extrema must clear their
/// neighborhood by `margin_quanta` disk-count quanta; the default covers the
/// sub-pixel count jitter of a moving disk (about 1.5 quanta in second
/// differences) with headroom, so quantization noise produces no picks.
VertexSet laii_vertices(const LaiiProfile& profile, int window, int margin_quanta = 3);

}  // namespace globvert
