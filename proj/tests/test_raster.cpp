#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include <globvert/contour.hpp>
#include <globvert/raster.hpp>

using namespace globvert;

namespace {

Raster block_raster(int width, int height, int x0, int y0, int bw, int bh) {
  Raster r;
  r.width = width;
  r.height = height;
  r.mask.assign(static_cast<size_t>(width) * height, 0);
  for (int y = y0; y < y0 + bh; ++y)
    for (int x = x0; x < x0 + bw; ++x) r.cell(x, y) = 1;
  return r;
}

size_t foreground_count(const Raster& r) {
  size_t c = 0;
  for (uint8_t v : r.mask) c += v;
  return c;
}

}  // namespace

TEST_SUITE("raster") {

TEST_CASE("tracing a 4x4 block yields the 12-pixel ring enclosing area 9") {
  const Raster r = block_raster(10, 10, 3, 3, 4, 4);
  const Points loop = trace_boundary(r);
  CHECK(loop.rows() == 12);
  CHECK(std::abs(signed_area(loop)) == doctest::Approx(9.0));
}

TEST_CASE("tracing errors") {
  Raster empty;
  empty.width = 6;
  empty.height = 6;
  empty.mask.assign(36, 0);
  CHECK_THROWS_WITH_AS(trace_boundary(empty), doctest::Contains("NoForeground"), Error);

  const Raster border = block_raster(10, 10, 0, 2, 3, 3);
  CHECK_THROWS_WITH_AS(trace_boundary(border), doctest::Contains("TouchesBorder"), Error);

  Raster two = block_raster(14, 8, 2, 2, 3, 3);
  for (int y = 2; y < 5; ++y)
    for (int x = 9; x < 12; ++x) two.cell(x, y) = 1;
  CHECK_THROWS_WITH_AS(trace_boundary(two), doctest::Contains("MultipleComponents"), Error);
}

TEST_CASE("traced disk area matches the pixel count oracle within 5%") {
  const int radius = 20;
  const int size = 2 * radius + 10;
  Raster r;
  r.width = size;
  r.height = size;
  r.mask.assign(static_cast<size_t>(size) * size, 0);
  const double c = size / 2.0;
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double dx = x + 0.5 - c, dy = y + 0.5 - c;
      if (dx * dx + dy * dy <= radius * radius) r.cell(x, y) = 1;
    }
  }
  const double pixel_area = static_cast<double>(foreground_count(r));
  const Points loop = trace_boundary(r);
  const double poly_area = std::abs(signed_area(loop));
  CHECK(std::abs(poly_area - pixel_area) / pixel_area < 0.05);
}

TEST_CASE("rasterized unit square covers the scaled area") {
  Points sq(4, 2);
  sq << 0, 0, 1, 0, 1, 1, 0, 1;
  const Raster r = rasterize(from_polyline(sq), 100.0, 8);
  const double count = static_cast<double>(foreground_count(r));
  CHECK(std::abs(count - 1e4) / 1e4 < 0.01);
}

TEST_CASE("rasterized circle covers pi r^2") {
  Points circle(512, 2);
  for (int i = 0; i < 512; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 512;
    circle.row(i) << std::cos(t), std::sin(t);
  }
  const Raster r = rasterize(from_polyline(circle), 100.0, 8);
  const double count = static_cast<double>(foreground_count(r));
  const double expected = std::numbers::pi * 1e4;
  CHECK(std::abs(count - expected) / expected < 0.01);
}

TEST_CASE("rasterizing a sliver neither crashes nor fills much") {
  Points sliver(3, 2);
  sliver << 0, 0, 1, 0.004, 2, 0;
  const Raster r = rasterize(from_polyline(sliver), 50.0, 4);
  CHECK(foreground_count(r) < 60);
}

TEST_CASE("PGM round trip through both encodings") {
  const Raster r = block_raster(9, 7, 2, 2, 4, 3);
  const std::string path = "test_roundtrip.pgm";
  write_pgm(path, r);
  const GrayImage img = read_pgm(path);
  CHECK(img.width == 9);
  CHECK(img.height == 7);
  const Raster back = binarize(img, 128);
  CHECK(back.mask == r.mask);

  // ASCII variant of the same image.
  FILE* f = std::fopen("test_ascii.pgm", "w");
  REQUIRE(f);
  std::fprintf(f, "P2\n# comment line\n%d %d\n255\n", img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) std::fprintf(f, "%d ", img.at(x, y));
    std::fprintf(f, "\n");
  }
  std::fclose(f);
  const GrayImage ascii = read_pgm("test_ascii.pgm");
  CHECK(ascii.pixels == img.pixels);
  std::remove(path.c_str());
  std::remove("test_ascii.pgm");
}

TEST_CASE("round trip contour -> raster -> trace recovers the shape") {
  Points circle(256, 2);
  for (int i = 0; i < 256; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 256;
    circle.row(i) << std::cos(t), std::sin(t);
  }
  const ClosedContour c = from_polyline(circle);
  const Raster r = rasterize(c, 80.0, 6);
  const Points traced = trace_boundary(r);
  const ClosedContour back = from_polyline(traced);
  // Pixel-center tracing stays within a pixel of the true boundary.
  for (int i = 0; i < back.size(); i += 16) {
    CHECK(std::abs(back.point(i).norm() - 1.0) < 2.0 / 80.0);
  }
}

}  // TEST_SUITE
