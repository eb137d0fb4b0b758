#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <globvert/contour.hpp>
#include <globvert/types.hpp>

namespace globvert {

/// Grayscale image as read from PGM (P2 or P5).
struct GrayImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<uint16_t> pixels;  // row-major

  uint16_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
};

/// Binary mask plus the transform that maps world coordinates into pixel space.
/// Pixel (x, y) covers the unit square with center (x + 0.5, y + 0.5).
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> mask;  // row-major, 0 or 1
  double origin_x = 0.0;      // world coordinate of pixel-space (0, 0)
  double origin_y = 0.0;
  double scale = 1.0;         // pixels per world unit
  bool undersampled = false;  // set when features thinner than ~2 px collapse

  bool foreground(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height &&
           mask[static_cast<size_t>(y) * width + x] != 0;
  }
  uint8_t& cell(int x, int y) { return mask[static_cast<size_t>(y) * width + x]; }

  Vec2 world_to_pixel(const Vec2& w) const {
    return Vec2((w.x() - origin_x) * scale, (w.y() - origin_y) * scale);
  }
  Vec2 pixel_to_world(const Vec2& p) const {
    return Vec2(origin_x + p.x() / scale, origin_y + p.y() / scale);
  }
};

GrayImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Raster& raster);

/// Foreground = pixels with value >= threshold.
Raster binarize(const GrayImage& image, int threshold);

/// Moore-neighbor boundary trace of the single 4-connected foreground component.
/// Returns the ordered loop of boundary pixel centers in world coordinates.
Points trace_boundary(const Raster& raster);
Points trace_boundary(const GrayImage& image, int threshold);

/// Even-odd scanline fill of the closed contour at `scale` pixels per unit with
/// a `margin_px` border.
Raster rasterize(const ClosedContour& contour, double scale, int margin_px);

}  // namespace globvert
