#pragma once

#include <optional>
#include <string>
#include <vector>

#include <globvert/descriptors.hpp>
#include <globvert/local_algebra.hpp>

namespace globvert {

enum class VertexLabel { convex, concave };

/// A detected global vertex: a zero crossing of phi' with a zero crossing of
/// phi''' inside the same window.
struct Vertex {
  double position = 0.0;             // fractional sample index
  double window = 0.0;               // co-localization window used (samples)
  VertexLabel label = VertexLabel::convex;
  double kappa_at = 0.0;             // curvature estimate at the nearest defined sample
  bool kappa_fallback = false;       // label derived from signs only
  std::vector<std::string> sources;  // scenario identifiers
};

struct VertexSet {
  int n = 0;  // sample count of the profile the positions refer to
  std::vector<Vertex> vertices;
};

struct DetectOptions {
  double window = 2.0;                    // co-localization tolerance in samples
  std::optional<double> slope_min;        // minimum |slope| of the phi''' crossing
  bool allow_plateaus = false;            // admit cz runs of phi' as anchors
  std::string source = "smooth";
  double eps_scale = 1e-6;                // tolerance factor for the crossing scan
};

/// Suggested window for an n-sample profile (2 samples per 100).
inline double default_window(int n) { return std::ceil(static_cast<double>(n) / 50.0); }

/// Anchors on each zero crossing of phi' and emits a vertex when a phi'''
/// crossing lies within the window; nearest wins, ties go to the steeper
/// crossing. Detections closer than the window are merged.
VertexSet detect(const DescriptorProfile& profile, const DetectOptions& options = {});

/// Labels each vertex convex/concave from the curvature estimate at the
/// nearest defined sample (standard convention: positive is convex). Falls
/// back to the sign of (phi'' - B - correction) / A when no estimate is
/// defined nearby.
void label_vertices(VertexSet& set, const DescriptorProfile& profile);

/// Merges scenario detections: clusters within the window are averaged, their
/// source lists accumulated. All sets must share the same sample count.
VertexSet union_scenarios(const std::vector<VertexSet>& sets, double window);

}  // namespace globvert
