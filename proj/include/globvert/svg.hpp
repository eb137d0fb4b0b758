#pragma once

#include <string>
#include <vector>

#include <globvert/contour.hpp>
#include <globvert/descriptors.hpp>
#include <globvert/vertices.hpp>

namespace globvert {

/// Stacked line plots of phi, phi'', A, B and kappa with sample ticks every 10
/// points. Hand-emitted SVG keeps the output byte-stable.
std::string profile_panels_svg(const DescriptorProfile& profile, const std::string& title);

/// Contour outline with vertex markers: convex vertices as filled circles,
/// concave as filled squares.
std::string contour_overlay_svg(const ClosedContour& contour, const VertexSet& vertices,
                                const std::string& title);

}  // namespace globvert
