#include <globvert/contour.hpp>

#include <cmath>
#include <vector>

namespace globvert {

namespace {

// A contour counts as uniformly sampled when consecutive chord lengths agree to
// this relative tolerance. Equal-arc samples of a curved polyline have chord
// spread of order ds^2 * kappa^2, so the gate is practical, not exact.
constexpr double kUniformRelTol = 1e-3;

bool chords_uniform(const Points& pts, double perimeter) {
  const int n = static_cast<int>(pts.rows());
  if (n < 2 || perimeter <= 0.0) return false;
  const double ds = perimeter / n;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const double len = (pts.row(j) - pts.row(i)).norm();
    if (std::abs(len - ds) > kUniformRelTol * ds) return false;
  }
  return true;
}

ClosedContour make_contour(Points pts) {
  ClosedContour c;
  c.perimeter = polyline_length(pts);
  c.uniform = chords_uniform(pts, c.perimeter);
  c.points = std::move(pts);
  return c;
}

}  // namespace

double polyline_length(const Points& pts, bool closed) {
  const int n = static_cast<int>(pts.rows());
  double len = 0.0;
  for (int i = 0; i + 1 < n; ++i) len += (pts.row(i + 1) - pts.row(i)).norm();
  if (closed && n > 1) len += (pts.row(0) - pts.row(n - 1)).norm();
  return len;
}

double signed_area(const Points& pts) {
  const int n = static_cast<int>(pts.rows());
  double twice = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    twice += pts(i, 0) * pts(j, 1) - pts(j, 0) * pts(i, 1);
  }
  return 0.5 * twice;
}

ClosedContour from_polyline(const Points& pts) {
  const int n = static_cast<int>(pts.rows());
  if (n < 3) fail(ErrorKind::input, "FewerThanThreePoints", "need at least 3 points");

  // Duplicate threshold relative to the data extent.
  const double span = (pts.colwise().maxCoeff() - pts.colwise().minCoeff()).norm();
  const double dup_tol = std::max(span, 1.0e-300) * 1e-12;

  std::vector<int> keep;
  keep.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!keep.empty() && (pts.row(i) - pts.row(keep.back())).norm() <= dup_tol) continue;
    keep.push_back(i);
  }
  // Closing pair: last point duplicating the first is dropped too.
  while (keep.size() > 1 &&
         (pts.row(keep.back()) - pts.row(keep.front())).norm() <= dup_tol) {
    keep.pop_back();
  }
  if (keep.size() < 3) fail(ErrorKind::input, "FewerThanThreePoints", "fewer than 3 distinct points");

  Points cleaned(static_cast<Eigen::Index>(keep.size()), 2);
  for (size_t i = 0; i < keep.size(); ++i) cleaned.row(static_cast<Eigen::Index>(i)) = pts.row(keep[i]);

  const double perimeter = polyline_length(cleaned);
  if (perimeter < 1e-30) {
    fail(ErrorKind::numeric, "ZeroPerimeter", "polygon has no measurable length");
  }

  if (signed_area(cleaned) < 0.0) {
    // Reverse while keeping the start point first.
    Points flipped(cleaned.rows(), 2);
    flipped.row(0) = cleaned.row(0);
    for (Eigen::Index i = 1; i < cleaned.rows(); ++i) flipped.row(i) = cleaned.row(cleaned.rows() - i);
    cleaned = std::move(flipped);
  }

  return make_contour(std::move(cleaned));
}

ClosedContour resample_uniform(const ClosedContour& contour, int n) {
  if (n < 8) fail(ErrorKind::config, "NTooSmall", "resampling needs at least 8 samples");
  const int m = contour.size();
  const Points& src = contour.points;

  // Cumulative arc length over the m closing segments.
  std::vector<double> cum(static_cast<size_t>(m) + 1, 0.0);
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    cum[static_cast<size_t>(i) + 1] = cum[static_cast<size_t>(i)] + (src.row(j) - src.row(i)).norm();
  }
  const double total = cum[static_cast<size_t>(m)];
  if (total <= 0.0) fail(ErrorKind::numeric, "ZeroPerimeter", "cannot resample a degenerate contour");

  Points out(n, 2);
  int seg = 0;
  for (int i = 0; i < n; ++i) {
    const double target = total * static_cast<double>(i) / static_cast<double>(n);
    while (seg + 1 < m && cum[static_cast<size_t>(seg) + 1] <= target) ++seg;
    const double seg_len = cum[static_cast<size_t>(seg) + 1] - cum[static_cast<size_t>(seg)];
    const double t = seg_len > 0.0 ? (target - cum[static_cast<size_t>(seg)]) / seg_len : 0.0;
    const int j = (seg + 1) % m;
    out.row(i) = (1.0 - t) * src.row(seg) + t * src.row(j);
  }

  ClosedContour result;
  result.points = std::move(out);
  result.perimeter = polyline_length(result.points);
  result.uniform = true;  // equal arc steps along the source by construction
  return result;
}

FrameField frames(const ClosedContour& contour) {
  const int n = contour.size();
  const Points& p = contour.points;
  FrameField f;
  f.tangent.resize(n, 2);
  f.normal.resize(n, 2);
  const double tiny = 1e-12 * std::max(contour.ds(), 1e-300);
  for (int i = 0; i < n; ++i) {
    const int prev = circular_index(i - 1, n);
    const int next = circular_index(i + 1, n);
    Vec2 d = p.row(next) - p.row(prev);
    const double len = d.norm();
    if (len <= tiny) fail(ErrorKind::numeric, "DegenerateTangent", "coincident neighbors at sample " + std::to_string(i));
    d /= len;
    f.tangent.row(i) = d;
    f.normal.row(i) = rotate90_ccw(d);
  }
  return f;
}

double diameter(const ClosedContour& contour) {
  const int n = contour.size();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      best = std::max(best, (contour.points.row(i) - contour.points.row(j)).norm());
    }
  }
  return best;
}

}  // namespace globvert
