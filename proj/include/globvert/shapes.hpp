#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include <globvert/contour.hpp>

namespace globvert {

enum class ShapeKind { circle, ellipse, rounded_rect, star };

/// Parameters for the analytic test shapes. Only the fields of the active kind
/// are read.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::circle;
  double radius = 1.0;                                     // circle
  double a = 2.0, b = 1.0;                                 // ellipse semi-axes
  double width = 2.0, height = 1.0, corner_radius = 0.1;   // rounded_rect
  double base = 1.0, amplitude = 0.3;                      // star
  int lobes = 5;                                           // star
  int samples = 100;
};

/// True when the string uses the shape grammar ("circle:R=1", "ellipse:a=2,b=1",
/// "rounded_rect:w=2,h=1,rc=0.1", "star:base=1,a=0.3,k=5").
bool looks_like_shape(const std::string& text);
ShapeSpec parse_shape(const std::string& grammar);
std::string shape_to_string(const ShapeSpec& spec);

/// Uniformly arc-length-sampled counterclockwise contour for the given shape,
/// starting at its parameter origin.
ClosedContour generate(const ShapeSpec& spec);

/// Signed curvature in the standard convention (convex toward the interior is
/// positive). Supported for circle and ellipse.
double analytic_curvature(const ShapeSpec& spec, double arc_position);
Eigen::ArrayXd analytic_curvature_profile(const ShapeSpec& spec, int n);

/// Discrete curvature kappa_i = (x'y'' - y'x'') / (x'^2 + y'^2)^(3/2) with
/// circular central differences. Oscillates wildly on noisy contours; that is
/// the expected failure mode it exists to demonstrate.
Eigen::ArrayXd fd_curvature(const ClosedContour& contour);

/// Arc-length positions of the shape's ground-truth vertices: ellipse axis
/// endpoints, rounded-rect corner-arc centers, star lobe extremes. Empty for
/// the circle.
std::vector<double> landmark_positions(const ShapeSpec& spec);

}  // namespace globvert
