#include <globvert/raster.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace globvert {

namespace {

// Skips whitespace and '#' comments in a PGM header stream.
int next_header_int(std::istream& in, const std::string& path) {
  while (true) {
    int ch = in.peek();
    if (ch == EOF) fail(ErrorKind::input, "BadPgm", "truncated header in " + path);
    if (std::isspace(ch)) {
      in.get();
    } else if (ch == '#') {
      std::string line;
      std::getline(in, line);
    } else {
      break;
    }
  }
  int value = 0;
  if (!(in >> value)) fail(ErrorKind::input, "BadPgm", "malformed header in " + path);
  return value;
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::input, "InputUnresolvable", "cannot open " + path);

  std::string magic;
  in >> magic;
  if (magic != "P2" && magic != "P5") fail(ErrorKind::input, "BadPgm", "not a PGM file: " + path);

  GrayImage img;
  img.width = next_header_int(in, path);
  img.height = next_header_int(in, path);
  img.maxval = next_header_int(in, path);
  if (img.width <= 0 || img.height <= 0 || img.maxval <= 0 || img.maxval > 65535) {
    fail(ErrorKind::input, "BadPgm", "bad dimensions in " + path);
  }
  const size_t count = static_cast<size_t>(img.width) * img.height;
  img.pixels.resize(count);

  if (magic == "P2") {
    for (size_t i = 0; i < count; ++i) {
      int v = 0;
      if (!(in >> v)) fail(ErrorKind::input, "BadPgm", "truncated pixel data in " + path);
      img.pixels[i] = static_cast<uint16_t>(v);
    }
  } else {
    in.get();  // single whitespace after maxval
    const int bytes = img.maxval > 255 ? 2 : 1;
    std::vector<unsigned char> raw(count * static_cast<size_t>(bytes));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
      fail(ErrorKind::input, "BadPgm", "truncated pixel data in " + path);
    }
    for (size_t i = 0; i < count; ++i) {
      img.pixels[i] = bytes == 1 ? raw[i]
                                 : static_cast<uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);
    }
  }
  return img;
}

void write_pgm(const std::string& path, const Raster& raster) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::input, "WriteFailure", "cannot write " + path);
  out << "P5\n" << raster.width << " " << raster.height << "\n255\n";
  std::vector<unsigned char> row(static_cast<size_t>(raster.width));
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      row[static_cast<size_t>(x)] = raster.mask[static_cast<size_t>(y) * raster.width + x] ? 255 : 0;
    }
    out.write(reinterpret_cast<const char*>(row.data()), raster.width);
  }
}

Raster binarize(const GrayImage& image, int threshold) {
  Raster r;
  r.width = image.width;
  r.height = image.height;
  r.mask.resize(static_cast<size_t>(image.width) * image.height);
  for (size_t i = 0; i < r.mask.size(); ++i) r.mask[i] = image.pixels[i] >= threshold ? 1 : 0;
  return r;
}

namespace {

// Moore neighborhood in clockwise order when y grows downward in storage.
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

size_t flood_count_4(const Raster& raster, int sx, int sy) {
  std::vector<uint8_t> seen(raster.mask.size(), 0);
  std::vector<std::pair<int, int>> stack{{sx, sy}};
  seen[static_cast<size_t>(sy) * raster.width + sx] = 1;
  size_t count = 0;
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    ++count;
    const int nx[4] = {x + 1, x - 1, x, x};
    const int ny[4] = {y, y, y + 1, y - 1};
    for (int k = 0; k < 4; ++k) {
      if (!raster.foreground(nx[k], ny[k])) continue;
      size_t idx = static_cast<size_t>(ny[k]) * raster.width + nx[k];
      if (!seen[idx]) {
        seen[idx] = 1;
        stack.emplace_back(nx[k], ny[k]);
      }
    }
  }
  return count;
}

}  // namespace

Points trace_boundary(const Raster& raster) {
  // Locate the start pixel and validate the component layout.
  int sx = -1, sy = -1;
  size_t total = 0;
  for (int y = 0; y < raster.height && sy < 0; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      if (raster.foreground(x, y)) {
        sx = x;
        sy = y;
        break;
      }
    }
  }
  if (sy < 0) fail(ErrorKind::input, "NoForeground", "no foreground pixels");
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      if (!raster.foreground(x, y)) continue;
      ++total;
      if (x == 0 || y == 0 || x == raster.width - 1 || y == raster.height - 1) {
        fail(ErrorKind::input, "TouchesBorder", "foreground touches the image border");
      }
    }
  }
  if (flood_count_4(raster, sx, sy) != total) {
    fail(ErrorKind::input, "MultipleComponents", "foreground is not a single 4-connected component");
  }

  std::vector<std::pair<int, int>> loop;
  int cx = sx, cy = sy;
  // Backtrack direction: the scan order guarantees the west neighbor is empty.
  int dir = 4;  // pointing from current pixel toward its backtrack (west)
  int first_move = -1;
  const int max_steps = 8 * static_cast<int>(total) + 8;
  for (int step = 0; step < max_steps; ++step) {
    int found = -1;
    for (int k = 1; k <= 8; ++k) {
      const int d = (dir + k) % 8;
      if (raster.foreground(cx + kDx[d], cy + kDy[d])) {
        found = d;
        break;
      }
    }
    if (found < 0) {  // isolated pixel
      loop.emplace_back(cx, cy);
      break;
    }
    // Jacob's criterion: stop when the start pixel is about to be left in the
    // same direction as the first move, so pinched shapes are traced fully.
    if (cx == sx && cy == sy) {
      if (step > 0 && found == first_move) break;
      if (step == 0) first_move = found;
    }
    loop.emplace_back(cx, cy);
    cx += kDx[found];
    cy += kDy[found];
    dir = (found + 4) % 8;  // new backtrack points at the previous pixel
  }

  Points out(static_cast<Eigen::Index>(loop.size()), 2);
  for (size_t i = 0; i < loop.size(); ++i) {
    const Vec2 center(loop[i].first + 0.5, loop[i].second + 0.5);
    out.row(static_cast<Eigen::Index>(i)) = raster.pixel_to_world(center);
  }
  return out;
}

Points trace_boundary(const GrayImage& image, int threshold) {
  return trace_boundary(binarize(image, threshold));
}

Raster rasterize(const ClosedContour& contour, double scale, int margin_px) {
  if (scale <= 0.0) fail(ErrorKind::config, "ScaleTooSmall", "scale must be positive");
  const Points& pts = contour.points;
  const double min_x = pts.col(0).minCoeff();
  const double max_x = pts.col(0).maxCoeff();
  const double min_y = pts.col(1).minCoeff();
  const double max_y = pts.col(1).maxCoeff();

  Raster r;
  r.scale = scale;
  r.origin_x = min_x - margin_px / scale;
  r.origin_y = min_y - margin_px / scale;
  r.width = static_cast<int>(std::ceil((max_x - min_x) * scale)) + 2 * margin_px + 1;
  r.height = static_cast<int>(std::ceil((max_y - min_y) * scale)) + 2 * margin_px + 1;
  r.mask.assign(static_cast<size_t>(r.width) * r.height, 0);
  r.undersampled = std::min(max_x - min_x, max_y - min_y) * scale < 4.0;

  const int n = contour.size();
  std::vector<double> px(static_cast<size_t>(n)), py(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec2 p = r.world_to_pixel(pts.row(i));
    px[static_cast<size_t>(i)] = p.x();
    py[static_cast<size_t>(i)] = p.y();
  }

  std::vector<double> xs;
  for (int row = 0; row < r.height; ++row) {
    const double yc = row + 0.5;
    xs.clear();
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      const double y0 = py[static_cast<size_t>(i)];
      const double y1 = py[static_cast<size_t>(j)];
      // Half-open span in y so shared vertices are counted once.
      if ((y0 <= yc && yc < y1) || (y1 <= yc && yc < y0)) {
        const double t = (yc - y0) / (y1 - y0);
        xs.push_back(px[static_cast<size_t>(i)] + t * (px[static_cast<size_t>(j)] - px[static_cast<size_t>(i)]));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (size_t k = 0; k + 1 < xs.size(); k += 2) {
      const int x_begin = static_cast<int>(std::ceil(xs[k] - 0.5));
      const int x_end = static_cast<int>(std::ceil(xs[k + 1] - 0.5));  // exclusive
      for (int x = std::max(0, x_begin); x < std::min(r.width, x_end); ++x) {
        r.cell(x, row) = 1;
      }
    }
  }
  return r;
}

}  // namespace globvert
