#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include <globvert/perturb.hpp>
#include <globvert/shapes.hpp>

using namespace globvert;

namespace {

ClosedContour circle(int n, double radius = 1.0) {
  ShapeSpec spec;
  spec.kind = ShapeKind::circle;
  spec.radius = radius;
  spec.samples = n;
  return generate(spec);
}

ClosedContour square400() {
  Points sq(4, 2);
  sq << 0, 0, 1, 0, 1, 1, 0, 1;
  return resample_uniform(from_polyline(sq), 400);
}

int occupied_direction_bins(const ClosedContour& c, int bins) {
  std::set<int> seen;
  for (int i = 0; i < c.size(); ++i) {
    const Vec2 d = c.point(i + 1) - c.point(i);
    const double angle = std::atan2(d.y(), d.x());
    int bin = static_cast<int>(std::floor((angle + std::numbers::pi) / (2.0 * std::numbers::pi) * bins));
    seen.insert(std::min(bin, bins - 1));
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_SUITE("perturb") {

TEST_CASE("noising_step inserts circle intersections at the right offset") {
  // Unit-spaced rectangle loop, 8 points, all segments length 1; with rho = 1
  // the offset from each midpoint is sqrt(3)/2.
  Points octagon(8, 2);
  octagon << 0, 0, 1, 0, 2, 0, 3, 0, 3, 1, 2, 1, 1, 1, 0, 1;
  const ClosedContour c = from_polyline(octagon);
  NoiseConfig cfg;
  cfg.rho = 1.0;
  cfg.side = SidePolicy::interior;
  const ClosedContour noised = noising_step(c, cfg);
  REQUIRE(noised.size() == 16);
  const double h = std::sqrt(3.0) / 2.0;
  // First segment (0,0)-(1,0): interior (left) is +y.
  CHECK(noised.point(1).x() == doctest::Approx(0.5));
  CHECK(noised.point(1).y() == doctest::Approx(h));
  // Originals are preserved verbatim at even indices.
  for (int i = 0; i < c.size(); ++i) {
    CHECK((noised.point(2 * i) - c.point(i)).norm() <= 1e-12);
  }
}

TEST_CASE("rho approaching one half degenerates to midpoints") {
  const ClosedContour c = circle(64);
  NoiseConfig cfg;
  cfg.rho = 0.5 + 1e-9;
  const ClosedContour noised = noising_step(c, cfg);
  for (int i = 0; i < c.size(); ++i) {
    const Vec2 midpoint = 0.5 * (c.point(i) + c.point(i + 1));
    CHECK((noised.point(2 * i + 1) - midpoint).norm() < 1e-4);
  }
}

TEST_CASE("noising validates its configuration") {
  const ClosedContour c = circle(32);
  NoiseConfig bad;
  bad.rho = 0.5;
  CHECK_THROWS_WITH_AS(noising_step(c, bad), doctest::Contains("RhoTooSmall"), Error);
  NoiseConfig deep;
  deep.iterations = 7;
  CHECK_THROWS_WITH_AS(noising(c, deep), doctest::Contains("BadIterations"), Error);
}

TEST_CASE("noising grows the boundary and collapses discrete curvature") {
  const ClosedContour c = circle(256);
  NoiseConfig cfg;
  cfg.rho = 0.8;
  const ClosedContour noised = noising_step(c, cfg);
  CHECK(noised.perimeter > c.perimeter);
  CHECK(fd_curvature(noised).abs().maxCoeff() >= 10.0 * fd_curvature(c).abs().maxCoeff());
  // Mean magnitude rises as well, the first global consequence of noising.
  CHECK(fd_curvature(noised).abs().mean() > fd_curvature(c).abs().mean());
}

TEST_CASE("one iteration equals noising_step, two iterations quadruple the count") {
  const ClosedContour c = circle(64);
  NoiseConfig cfg;
  cfg.rho = 0.9;
  const ClosedContour once = noising(c, cfg);
  const ClosedContour step_once = noising_step(c, cfg);
  CHECK((once.points - step_once.points).cwiseAbs().maxCoeff() == 0.0);

  cfg.iterations = 2;
  CHECK(noising(c, cfg).size() == 4 * 64);
}

TEST_CASE("random side policy is reproducible under a fixed seed") {
  const ClosedContour c = circle(128);
  NoiseConfig cfg;
  cfg.side = SidePolicy::random;
  cfg.seed = 1234;
  cfg.iterations = 2;
  const ClosedContour a = noising(c, cfg);
  const ClosedContour b = noising(c, cfg);
  CHECK((a.points - b.points).cwiseAbs().maxCoeff() == 0.0);
  cfg.seed = 99;
  const ClosedContour other = noising(c, cfg);
  CHECK((a.points - other.points).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("noising commutes with rotations for deterministic policies") {
  const ClosedContour c = circle(128);
  const double angle = 0.61;
  Eigen::Matrix2d rot;
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);

  NoiseConfig cfg;
  cfg.rho = 0.8;
  ClosedContour rotated = c;
  rotated.points = (rot * c.points.transpose()).transpose();

  const ClosedContour noise_then_rotate = [&] {
    ClosedContour nc = noising(c, cfg);
    nc.points = (rot * nc.points.transpose()).transpose();
    return nc;
  }();
  const ClosedContour rotate_then_noise = noising(rotated, cfg);
  CHECK((noise_then_rotate.points - rotate_then_noise.points).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("noising enriches the tangent direction histogram") {
  const int bins = 36;
  const ClosedContour c = circle(256);
  NoiseConfig cfg;
  cfg.rho = 0.8;
  const ClosedContour noised = noising_step(c, cfg);
  const int before = occupied_direction_bins(c, bins);
  const int after = occupied_direction_bins(noised, bins);
  CHECK(after >= before);

  // On a coarse square the enrichment is strict: four directions become many.
  const ClosedContour sq = square400();
  const int sq_before = occupied_direction_bins(sq, bins);
  const int sq_after = occupied_direction_bins(noising_step(sq, cfg), bins);
  CHECK(sq_after > sq_before);
}

TEST_CASE("smoothing shrinks a circle by less than the cosine bound") {
  const int n = 256;
  const int window = 5;
  const ClosedContour c = circle(n);
  const ClosedContour s = smooth(c, window, 1);
  double mean_radius = 0.0;
  for (int i = 0; i < s.size(); ++i) mean_radius += s.point(i).norm();
  mean_radius /= s.size();
  const double bound = window * window * std::pow(2.0 * std::numbers::pi / n, 2.0) / 8.0;
  CHECK(mean_radius < 1.0);
  CHECK(1.0 - mean_radius < bound);
}

TEST_CASE("smoothing flattens square corners at least twofold") {
  const ClosedContour sq = square400();
  const ClosedContour s = smooth(sq, 5, 3);
  const double before = fd_curvature(sq).abs().maxCoeff();
  const double after = fd_curvature(s).abs().maxCoeff();
  CHECK(before >= 2.0 * after);
}

TEST_CASE("smooth window one is the identity and bad windows throw") {
  const ClosedContour c = circle(64);
  const ClosedContour same = smooth(c, 1, 3);
  CHECK((same.points - c.points).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_WITH_AS(smooth(c, 4, 1), doctest::Contains("BadWindow"), Error);
  CHECK_THROWS_WITH_AS(smooth(c, -3, 1), doctest::Contains("BadWindow"), Error);
}

}  // TEST_SUITE
