#pragma once

#include <globvert/types.hpp>

namespace globvert {

/// Closed planar boundary. Points are ordered counterclockwise (positive signed
/// area); the segment from the last point back to the first is implied.
///
/// `uniform` marks contours sampled at equal arc-length steps along their source
/// polyline. Descriptor and frame computations require it.
struct ClosedContour {
  Points points;
  double perimeter = 0.0;
  bool uniform = false;

  int size() const { return static_cast<int>(points.rows()); }
  double ds() const { return perimeter / size(); }
  Vec2 point(int i) const { return points.row(circular_index(i, size())); }
};

/// Unit tangent and inward unit normal at every sample of a uniform contour.
/// The normal is the tangent rotated a quarter turn counterclockwise, which
/// points into the bounded region for counterclockwise loops.
struct FrameField {
  Points tangent;
  Points normal;
};

double polyline_length(const Points& pts, bool closed = true);
double signed_area(const Points& pts);

/// Builds a contour from raw points: drops duplicate consecutive points (the
/// closing pair included) and normalizes orientation to counterclockwise.
ClosedContour from_polyline(const Points& pts);

/// Places n points at arc positions i*perimeter/n along the polygon, with linear
/// interpolation on segments. Chord interpolation is deliberate: corners survive.
ClosedContour resample_uniform(const ClosedContour& contour, int n);

/// Tangents by circular central differences, normals as their left quarter-turn.
FrameField frames(const ClosedContour& contour);

/// Exact maximum pairwise sample distance, O(N^2).
double diameter(const ClosedContour& contour);

}  // namespace globvert
