#include <globvert/perturb.hpp>

#include <cmath>
#include <random>

namespace globvert {

namespace {

void validate(const NoiseConfig& config) {
  if (!(config.rho > 0.5)) {
    fail(ErrorKind::config, "RhoTooSmall", "rho must exceed 0.5 for the circles to intersect");
  }
  if (config.iterations < 1 || config.iterations > 6) {
    fail(ErrorKind::config, "BadIterations", "iterations must be in [1, 6]");
  }
}

ClosedContour step(const ClosedContour& contour, const NoiseConfig& config, std::mt19937_64& rng) {
  const int n = contour.size();
  if (n < 8) fail(ErrorKind::config, "NTooSmall", "noising needs at least 8 points");
  const Points& p = contour.points;
  const double offset_factor = std::sqrt(config.rho * config.rho - 0.25);
  const double tiny = 1e-12 * contour.ds();

  std::bernoulli_distribution coin(0.5);
  Points out(2 * n, 2);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const Vec2 a = p.row(i);
    const Vec2 b = p.row(j);
    const Vec2 seg = b - a;
    const double d = seg.norm();
    if (d <= tiny) fail(ErrorKind::numeric, "DegenerateSegment", "zero-length segment at " + std::to_string(i));

    // Left of the segment points into the bounded region on a CCW loop.
    const Vec2 inward = rotate90_ccw(seg / d);
    double side = 0.0;
    switch (config.side) {
      case SidePolicy::alternate: side = (i % 2 == 0) ? -1.0 : 1.0; break;
      case SidePolicy::interior: side = 1.0; break;
      case SidePolicy::exterior: side = -1.0; break;
      case SidePolicy::random: side = coin(rng) ? 1.0 : -1.0; break;
    }

    out.row(2 * i) = a;
    out.row(2 * i + 1) = 0.5 * (a + b) + side * (offset_factor * d) * inward;
  }

  ClosedContour result;
  result.points = std::move(out);
  result.perimeter = polyline_length(result.points);
  // All inserted chords measure rho * d, so uniformity is inherited.
  result.uniform = contour.uniform;
  return result;
}

}  // namespace

ClosedContour noising_step(const ClosedContour& contour, const NoiseConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  return step(contour, config, rng);
}

ClosedContour noising(const ClosedContour& contour, const NoiseConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  ClosedContour current = contour;
  for (int it = 0; it < config.iterations; ++it) current = step(current, config, rng);
  return current;
}

ClosedContour smooth(const ClosedContour& contour, int window, int passes) {
  if (window < 1 || window % 2 == 0) fail(ErrorKind::config, "BadWindow", "window must be odd and positive");
  if (passes < 0) fail(ErrorKind::config, "BadWindow", "passes must be non-negative");
  if (window == 1 || passes == 0) return contour;

  const int n = contour.size();
  const int half = window / 2;
  Points current = contour.points;
  for (int pass = 0; pass < passes; ++pass) {
    Points next(n, 2);
    for (int i = 0; i < n; ++i) {
      Vec2 acc(0.0, 0.0);
      for (int k = -half; k <= half; ++k) acc += Vec2(current.row(circular_index(i + k, n)));
      next.row(i) = acc / static_cast<double>(window);
    }
    current = std::move(next);
  }

  ClosedContour averaged;
  averaged.points = std::move(current);
  averaged.perimeter = polyline_length(averaged.points);
  averaged.uniform = false;  // averaging warps the spacing slightly
  return resample_uniform(averaged, n);
}

}  // namespace globvert
