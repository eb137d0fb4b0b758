#include <globvert/svg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace globvert {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Panel {
  std::string name;
  const Eigen::ArrayXd* data;
};

void emit_panel(std::ostringstream& out, const Panel& panel, double x0, double y0,
                double width, double height) {
  const Eigen::ArrayXd& d = *panel.data;
  const int n = static_cast<int>(d.size());
  double lo = d.minCoeff();
  double hi = d.maxCoeff();
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" fill=\"white\" stroke=\"#888\"/>\n";
  out << "<text x=\"" << num(x0 + 4) << "\" y=\"" << num(y0 + 14)
      << "\" font-size=\"11\" font-family=\"sans-serif\">" << panel.name << "</text>\n";

  // Zero line when visible.
  if (lo < 0.0 && hi > 0.0) {
    const double zy = y0 + height * (hi / (hi - lo));
    out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(zy) << "\" x2=\"" << num(x0 + width)
        << "\" y2=\"" << num(zy) << "\" stroke=\"#ccc\"/>\n";
  }
  // Sample ticks every 10 points.
  for (int i = 0; i < n; i += 10) {
    const double tx = x0 + width * static_cast<double>(i) / static_cast<double>(n - 1);
    out << "<line x1=\"" << num(tx) << "\" y1=\"" << num(y0 + height - 4) << "\" x2=\"" << num(tx)
        << "\" y2=\"" << num(y0 + height) << "\" stroke=\"#888\"/>\n";
  }

  out << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1\" points=\"";
  for (int i = 0; i < n; ++i) {
    const double px = x0 + width * static_cast<double>(i) / static_cast<double>(n - 1);
    const double value = std::isfinite(d[i]) ? d[i] : 0.0;
    const double py = y0 + height * (hi - value) / (hi - lo);
    out << num(px) << "," << num(py) << " ";
  }
  out << "\"/>\n";
}

}  // namespace

std::string profile_panels_svg(const DescriptorProfile& profile, const std::string& title) {
  const double width = 640, panel_h = 110, gap = 10, margin = 12;
  std::vector<Panel> panels = {
      {"phi", &profile.phi},       {"phi''", &profile.phi_d2}, {"A", &profile.A},
      {"B", &profile.B},           {"kappa", &profile.kappa_global},
  };
  const double total_h = margin * 2 + 20 + panels.size() * panel_h + (panels.size() - 1) * gap;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width + 2 * margin)
      << "\" height=\"" << num(total_h) << "\">\n";
  out << "<text x=\"" << num(margin) << "\" y=\"" << num(margin + 8)
      << "\" font-size=\"12\" font-family=\"sans-serif\">" << title << "</text>\n";
  double y = margin + 20;
  for (const Panel& p : panels) {
    emit_panel(out, p, margin, y, width, panel_h);
    y += panel_h + gap;
  }
  out << "</svg>\n";
  return out.str();
}

std::string contour_overlay_svg(const ClosedContour& contour, const VertexSet& vertices,
                                const std::string& title) {
  const double size = 520, margin = 30;
  const Points& pts = contour.points;
  const double min_x = pts.col(0).minCoeff(), max_x = pts.col(0).maxCoeff();
  const double min_y = pts.col(1).minCoeff(), max_y = pts.col(1).maxCoeff();
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0.0 ? (size - 2 * margin) / span : 1.0;

  auto to_px = [&](const Vec2& p) {
    // Flip y so the shape appears in the usual orientation.
    return Vec2(margin + (p.x() - min_x) * scale, size - margin - (p.y() - min_y) * scale);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\""
      << num(size) << "\">\n";
  out << "<text x=\"" << num(margin) << "\" y=\"18\" font-size=\"12\" font-family=\"sans-serif\">"
      << title << "</text>\n";
  out << "<polygon fill=\"none\" stroke=\"#333\" stroke-width=\"1\" points=\"";
  for (int i = 0; i < contour.size(); ++i) {
    const Vec2 p = to_px(pts.row(i));
    out << num(p.x()) << "," << num(p.y()) << " ";
  }
  out << "\"/>\n";

  const int n = contour.size();
  for (const Vertex& v : vertices.vertices) {
    const int i0 = circular_index(static_cast<int>(std::floor(v.position)), n);
    const int i1 = circular_index(i0 + 1, n);
    const double t = v.position - std::floor(v.position);
    const Vec2 world = (1.0 - t) * Vec2(pts.row(i0)) + t * Vec2(pts.row(i1));
    const Vec2 p = to_px(world);
    if (v.label == VertexLabel::convex) {
      out << "<circle cx=\"" << num(p.x()) << "\" cy=\"" << num(p.y())
          << "\" r=\"4\" fill=\"#c21f1f\"/>\n";
    } else {
      out << "<rect x=\"" << num(p.x() - 3.5) << "\" y=\"" << num(p.y() - 3.5)
          << "\" width=\"7\" height=\"7\" fill=\"#1f7a1f\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace globvert
