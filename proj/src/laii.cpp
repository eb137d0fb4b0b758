#include <globvert/laii.hpp>

#include <cmath>

namespace globvert {

LaiiProfile laii_profile(const Raster& raster, const Points& samples_px, int radius) {
  if (radius < 2) fail(ErrorKind::config, "BadRadius", "disk radius must be at least 2 px");
  const int n = static_cast<int>(samples_px.rows());

  LaiiProfile profile;
  profile.radius = radius;
  profile.raster_width = raster.width;
  profile.raster_height = raster.height;
  profile.fraction.resize(n);

  const double r_sq = static_cast<double>(radius) * radius;
  for (int i = 0; i < n; ++i) {
    const double cx = samples_px(i, 0);
    const double cy = samples_px(i, 1);
    if (cx < 0.0 || cy < 0.0 || cx > raster.width || cy > raster.height) {
      fail(ErrorKind::input, "SampleOutsideRaster", "sample " + std::to_string(i) + " lies outside the raster");
    }

    long inside = 0, total = 0;
    const int y_begin = static_cast<int>(std::floor(cy - radius));
    const int y_end = static_cast<int>(std::ceil(cy + radius));
    for (int y = y_begin; y <= y_end; ++y) {
      const double dy = (y + 0.5) - cy;
      const double span_sq = r_sq - dy * dy;
      if (span_sq < 0.0) continue;
      const double span = std::sqrt(span_sq);
      const int x_begin = static_cast<int>(std::ceil(cx - span - 0.5));
      const int x_end = static_cast<int>(std::floor(cx + span - 0.5));
      for (int x = x_begin; x <= x_end; ++x) {
        ++total;
        if (raster.foreground(x, y)) ++inside;
      }
    }
    profile.fraction[i] = total > 0 ? static_cast<double>(inside) / static_cast<double>(total) : 0.0;
    profile.disk_pixels = std::max(profile.disk_pixels, total);
  }
  return profile;
}

VertexSet laii_vertices(const LaiiProfile& profile, int window, int margin_quanta) {
  const int n = static_cast<int>(profile.fraction.size());
  VertexSet set;
  set.n = n;
  if (n == 0 || profile.disk_pixels == 0) return set;
  const double quantum = margin_quanta / static_cast<double>(profile.disk_pixels);

  for (int i = 0; i < n; ++i) {
    const double center = profile.fraction[i];
    bool is_min = true, is_max = true;
    for (int k = 1; k <= window; ++k) {
      const double lo = profile.fraction[circular_index(i - k, n)];
      const double hi = profile.fraction[circular_index(i + k, n)];
      if (center > lo - quantum || center > hi - quantum) is_min = false;
      if (center < lo + quantum || center < hi + quantum) is_max = false;
      if (!is_min && !is_max) break;
    }
    if (!is_min && !is_max) continue;

    Vertex v;
    v.position = static_cast<double>(i);
    v.window = static_cast<double>(window);
    v.label = is_min ? VertexLabel::convex : VertexLabel::concave;
    v.kappa_at = center;  // the raw fraction; LAII has no curvature scale
    v.sources = {"laii"};
    set.vertices.push_back(std::move(v));
  }
  return set;
}

}  // namespace globvert
