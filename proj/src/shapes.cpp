#include <globvert/shapes.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace globvert {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void validate(const ShapeSpec& spec) {
  switch (spec.kind) {
    case ShapeKind::circle:
      if (spec.radius <= 0.0) fail(ErrorKind::config, "InvalidSpec", "circle radius must be positive");
      break;
    case ShapeKind::ellipse:
      if (spec.a <= 0.0 || spec.b <= 0.0) fail(ErrorKind::config, "InvalidSpec", "ellipse semi-axes must be positive");
      break;
    case ShapeKind::rounded_rect:
      if (spec.width <= 0.0 || spec.height <= 0.0 || spec.corner_radius <= 0.0) {
        fail(ErrorKind::config, "InvalidSpec", "rounded_rect dimensions must be positive");
      }
      if (spec.corner_radius > 0.5 * std::min(spec.width, spec.height)) {
        fail(ErrorKind::config, "InvalidSpec", "corner radius exceeds half the short side");
      }
      break;
    case ShapeKind::star:
      if (spec.base <= 0.0 || spec.amplitude <= 0.0 || spec.lobes < 2) {
        fail(ErrorKind::config, "InvalidSpec", "star needs positive base, amplitude and k >= 2");
      }
      if (spec.amplitude >= spec.base) {
        fail(ErrorKind::config, "InvalidSpec", "star amplitude must stay below the base radius");
      }
      break;
  }
  if (spec.samples < 8) fail(ErrorKind::config, "NTooSmall", "shape needs at least 8 samples");
}

// Cumulative chord-length table for a parametric curve sampled at m+1 knots of
// t in [0, tau]. Used to invert arc length -> parameter.
struct ArcTable {
  std::vector<double> t;
  std::vector<double> s;
  double total = 0.0;

  double param_at_arc(double arc) const {
    arc = std::fmod(arc, total);
    if (arc < 0.0) arc += total;
    auto it = std::upper_bound(s.begin(), s.end(), arc);
    size_t hi = std::min(s.size() - 1, static_cast<size_t>(it - s.begin()));
    size_t lo = hi - 1;
    const double span = s[hi] - s[lo];
    const double u = span > 0.0 ? (arc - s[lo]) / span : 0.0;
    return t[lo] + u * (t[hi] - t[lo]);
  }
};

template <typename PointFn>
ArcTable build_arc_table(int m, PointFn&& point_at) {
  ArcTable table;
  table.t.resize(static_cast<size_t>(m) + 1);
  table.s.resize(static_cast<size_t>(m) + 1);
  Vec2 prev = point_at(0.0);
  table.t[0] = 0.0;
  table.s[0] = 0.0;
  for (int i = 1; i <= m; ++i) {
    const double ti = kTau * static_cast<double>(i) / static_cast<double>(m);
    const Vec2 p = point_at(ti);
    table.t[static_cast<size_t>(i)] = ti;
    table.s[static_cast<size_t>(i)] = table.s[static_cast<size_t>(i) - 1] + (p - prev).norm();
    prev = p;
  }
  table.total = table.s.back();
  return table;
}

Vec2 ellipse_point(const ShapeSpec& spec, double t) {
  return Vec2(spec.a * std::cos(t), spec.b * std::sin(t));
}

Vec2 star_point(const ShapeSpec& spec, double t) {
  const double r = spec.base + spec.amplitude * std::cos(spec.lobes * t);
  return Vec2(r * std::cos(t), r * std::sin(t));
}

double ellipse_curvature_at_param(const ShapeSpec& spec, double t) {
  const double a = spec.a, b = spec.b;
  const double d = a * a * std::sin(t) * std::sin(t) + b * b * std::cos(t) * std::cos(t);
  return a * b / std::pow(d, 1.5);
}

// Rounded rectangle traced counterclockwise from the start of the bottom edge,
// composed of four straight runs and four quarter arcs. Arc length maps to a
// point exactly, so generated samples sit on the true shape.
struct RoundedRect {
  double w, h, rc;
  double edge_w, edge_h, arc;  // piece lengths
  double total;

  explicit RoundedRect(const ShapeSpec& spec)
      : w(spec.width), h(spec.height), rc(spec.corner_radius) {
    edge_w = w - 2.0 * rc;
    edge_h = h - 2.0 * rc;
    arc = 0.5 * std::numbers::pi * rc;
    total = 2.0 * edge_w + 2.0 * edge_h + 4.0 * arc;
  }

  Vec2 point_at_arc(double s) const {
    s = std::fmod(s, total);
    if (s < 0.0) s += total;
    const double hw = 0.5 * w, hh = 0.5 * h;
    // bottom edge
    if (s < edge_w) return Vec2(-hw + rc + s, -hh);
    s -= edge_w;
    if (s < arc) return corner(Vec2(hw - rc, -hh + rc), -0.25 * kTau, s);
    s -= arc;
    if (s < edge_h) return Vec2(hw, -hh + rc + s);
    s -= edge_h;
    if (s < arc) return corner(Vec2(hw - rc, hh - rc), 0.0, s);
    s -= arc;
    if (s < edge_w) return Vec2(hw - rc - s, hh);
    s -= edge_w;
    if (s < arc) return corner(Vec2(-hw + rc, hh - rc), 0.25 * kTau, s);
    s -= arc;
    if (s < edge_h) return Vec2(-hw, hh - rc - s);
    s -= edge_h;
    return corner(Vec2(-hw + rc, -hh + rc), 0.5 * kTau, s);
  }

  std::vector<double> corner_centers() const {
    const double half_arc = 0.5 * arc;
    return {
        edge_w + half_arc,
        edge_w + arc + edge_h + half_arc,
        2.0 * edge_w + 2.0 * arc + edge_h + half_arc,
        2.0 * edge_w + 3.0 * arc + 2.0 * edge_h + half_arc,
    };
  }

 private:
  Vec2 corner(const Vec2& center, double start_angle, double s) const {
    const double ang = start_angle + s / rc;
    return center + rc * Vec2(std::cos(ang), std::sin(ang));
  }
};

ClosedContour contour_from_exact_samples(Points pts) {
  ClosedContour c = from_polyline(pts);
  c.uniform = true;  // samples were placed at exact equal arc steps
  return c;
}

}  // namespace

bool looks_like_shape(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return text == "circle" || text == "ellipse" ||
                                         text == "rounded_rect" || text == "star";
  const std::string head = text.substr(0, colon);
  return head == "circle" || head == "ellipse" || head == "rounded_rect" || head == "star";
}

ShapeSpec parse_shape(const std::string& grammar) {
  ShapeSpec spec;
  const auto colon = grammar.find(':');
  const std::string head = grammar.substr(0, colon);
  if (head == "circle") spec.kind = ShapeKind::circle;
  else if (head == "ellipse") spec.kind = ShapeKind::ellipse;
  else if (head == "rounded_rect") spec.kind = ShapeKind::rounded_rect;
  else if (head == "star") spec.kind = ShapeKind::star;
  else fail(ErrorKind::config, "InvalidSpec", "unknown shape kind '" + head + "'");

  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::stringstream rest(grammar.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorKind::config, "InvalidSpec", "expected key=value in '" + item + "'");
      try {
        kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        fail(ErrorKind::config, "InvalidSpec", "bad number in '" + item + "'");
      }
    }
  }

  for (const auto& [key, value] : kv) {
    if (key == "R" || key == "r") spec.radius = value;
    else if (key == "a" && spec.kind == ShapeKind::star) spec.amplitude = value;
    else if (key == "a") spec.a = value;
    else if (key == "b") spec.b = value;
    else if (key == "w") spec.width = value;
    else if (key == "h") spec.height = value;
    else if (key == "rc") spec.corner_radius = value;
    else if (key == "base") spec.base = value;
    else if (key == "k") spec.lobes = static_cast<int>(value);
    else if (key == "N") spec.samples = static_cast<int>(value);
    else fail(ErrorKind::config, "InvalidSpec", "unknown shape parameter '" + key + "'");
  }
  validate(spec);
  return spec;
}

std::string shape_to_string(const ShapeSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case ShapeKind::circle: out << "circle:R=" << spec.radius; break;
    case ShapeKind::ellipse: out << "ellipse:a=" << spec.a << ",b=" << spec.b; break;
    case ShapeKind::rounded_rect:
      out << "rounded_rect:w=" << spec.width << ",h=" << spec.height << ",rc=" << spec.corner_radius;
      break;
    case ShapeKind::star:
      out << "star:base=" << spec.base << ",a=" << spec.amplitude << ",k=" << spec.lobes;
      break;
  }
  return out.str();
}

ClosedContour generate(const ShapeSpec& spec) {
  validate(spec);
  const int n = spec.samples;
  Points pts(n, 2);

  switch (spec.kind) {
    case ShapeKind::circle: {
      for (int i = 0; i < n; ++i) {
        const double t = kTau * static_cast<double>(i) / static_cast<double>(n);
        pts.row(i) = spec.radius * Vec2(std::cos(t), std::sin(t));
      }
      return contour_from_exact_samples(std::move(pts));
    }
    case ShapeKind::ellipse: {
      const int m = std::max(8192, 64 * n);
      const ArcTable table = build_arc_table(m, [&](double t) { return ellipse_point(spec, t); });
      for (int i = 0; i < n; ++i) {
        const double s = table.total * static_cast<double>(i) / static_cast<double>(n);
        pts.row(i) = ellipse_point(spec, table.param_at_arc(s));
      }
      return contour_from_exact_samples(std::move(pts));
    }
    case ShapeKind::rounded_rect: {
      const RoundedRect rect(spec);
      for (int i = 0; i < n; ++i) {
        const double s = rect.total * static_cast<double>(i) / static_cast<double>(n);
        pts.row(i) = rect.point_at_arc(s);
      }
      return contour_from_exact_samples(std::move(pts));
    }
    case ShapeKind::star: {
      const int m = std::max(8192, 64 * n);
      Points dense(m, 2);
      for (int i = 0; i < m; ++i) {
        const double t = kTau * static_cast<double>(i) / static_cast<double>(m);
        dense.row(i) = star_point(spec, t);
      }
      return resample_uniform(from_polyline(dense), n);
    }
  }
  fail(ErrorKind::config, "InvalidSpec", "unreachable shape kind");
}

double analytic_curvature(const ShapeSpec& spec, double arc_position) {
  validate(spec);
  switch (spec.kind) {
    case ShapeKind::circle:
      return 1.0 / spec.radius;
    case ShapeKind::ellipse: {
      const ArcTable table = build_arc_table(1 << 17, [&](double t) { return ellipse_point(spec, t); });
      return ellipse_curvature_at_param(spec, table.param_at_arc(arc_position));
    }
    default:
      fail(ErrorKind::config, "UnsupportedKind", "analytic curvature needs circle or ellipse");
  }
}

Eigen::ArrayXd analytic_curvature_profile(const ShapeSpec& spec, int n) {
  validate(spec);
  Eigen::ArrayXd kappa(n);
  switch (spec.kind) {
    case ShapeKind::circle:
      kappa.setConstant(1.0 / spec.radius);
      return kappa;
    case ShapeKind::ellipse: {
      const ArcTable table = build_arc_table(1 << 17, [&](double t) { return ellipse_point(spec, t); });
      for (int i = 0; i < n; ++i) {
        const double s = table.total * static_cast<double>(i) / static_cast<double>(n);
        kappa[i] = ellipse_curvature_at_param(spec, table.param_at_arc(s));
      }
      return kappa;
    }
    default:
      fail(ErrorKind::config, "UnsupportedKind", "analytic curvature needs circle or ellipse");
  }
}

Eigen::ArrayXd fd_curvature(const ClosedContour& contour) {
  const int n = contour.size();
  const double ds = contour.ds();
  const Points& p = contour.points;
  Eigen::ArrayXd kappa(n);
  for (int i = 0; i < n; ++i) {
    const int prev = circular_index(i - 1, n);
    const int next = circular_index(i + 1, n);
    const double xd = (p(next, 0) - p(prev, 0)) / (2.0 * ds);
    const double yd = (p(next, 1) - p(prev, 1)) / (2.0 * ds);
    const double xdd = (p(next, 0) - 2.0 * p(i, 0) + p(prev, 0)) / (ds * ds);
    const double ydd = (p(next, 1) - 2.0 * p(i, 1) + p(prev, 1)) / (ds * ds);
    const double speed_sq = xd * xd + yd * yd;
    kappa[i] = (xd * ydd - yd * xdd) / std::pow(speed_sq, 1.5);
  }
  return kappa;
}

std::vector<double> landmark_positions(const ShapeSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ShapeKind::circle:
      return {};
    case ShapeKind::ellipse: {
      const ArcTable table = build_arc_table(1 << 17, [&](double t) { return ellipse_point(spec, t); });
      return {0.0, 0.25 * table.total, 0.5 * table.total, 0.75 * table.total};
    }
    case ShapeKind::rounded_rect:
      return RoundedRect(spec).corner_centers();
    case ShapeKind::star: {
      // Lobe extremes alternate outer (t = j*tau/k) and inner (midway between).
      const int m = std::max(1 << 15, 512 * spec.lobes);
      const ArcTable table = build_arc_table(m, [&](double t) { return star_point(spec, t); });
      std::vector<double> out;
      const int k = spec.lobes;
      for (int j = 0; j < 2 * k; ++j) {
        const double t = kTau * static_cast<double>(j) / static_cast<double>(2 * k);
        // Inverse lookup: param -> arc by scanning the monotone table.
        auto it = std::lower_bound(table.t.begin(), table.t.end(), t);
        const size_t idx = static_cast<size_t>(it - table.t.begin());
        out.push_back(table.s[std::min(idx, table.s.size() - 1)]);
      }
      return out;
    }
  }
  return {};
}

}  // namespace globvert
