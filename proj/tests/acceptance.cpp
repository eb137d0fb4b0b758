// Acceptance suite: end-to-end checks of the library and CLI against their
// published tolerances. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail.
//
// Usage: acceptance [path-to-cli] [work-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <globvert/contour.hpp>
#include <globvert/descriptors.hpp>
#include <globvert/io.hpp>
#include <globvert/laii.hpp>
#include <globvert/perturb.hpp>
#include <globvert/raster.hpp>
#include <globvert/shapes.hpp>
#include <globvert/vertices.hpp>

using namespace globvert;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("[%s] %2d. %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ClosedContour make_circle(double radius, int n) {
  ShapeSpec spec;
  spec.kind = ShapeKind::circle;
  spec.radius = radius;
  spec.samples = n;
  return generate(spec);
}

ClosedContour make_ellipse(int n) {
  ShapeSpec spec = parse_shape("ellipse:a=2,b=1");
  spec.samples = n;
  return generate(spec);
}

ClosedContour make_rect(int n) {
  ShapeSpec spec = parse_shape("rounded_rect:w=2,h=1,rc=0.1");
  spec.samples = n;
  return generate(spec);
}

double nearest(const VertexSet& set, double target) {
  double best = static_cast<double>(set.n);
  for (const Vertex& v : set.vertices) {
    best = std::min(best, circular_distance(v.position, target, set.n));
  }
  return best;
}

// ---- criteria ----

// Circle closed forms: phi ~ 8, A ~ 4, B ~ 2, C and D ~ 0 at N = 512.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const DescriptorProfile p = compute_profile(make_circle(1.0, 512));
  const double elapsed = seconds_since(start);
  const double phi_err = (p.phi - 8.0).abs().maxCoeff();
  const double a_err = (p.A - 4.0).abs().maxCoeff();
  const double b_err = (p.B - 2.0).abs().maxCoeff();
  const double c_max = p.C.abs().maxCoeff();
  const double d_max = p.D.abs().maxCoeff();
  const bool pass =
      phi_err <= 0.04 && a_err <= 0.04 && b_err <= 0.04 && c_max <= 0.02 && d_max <= 0.02 &&
      elapsed < 1.0;
  std::ostringstream what;
  what << "circle closed forms: |phi-8|=" << phi_err << " |A-4|=" << a_err << " |B-2|=" << b_err
       << " |C|=" << c_max << " |D|=" << d_max << " in " << elapsed << "s";
  report(1, pass, what.str());
}

// Curvature calibration on circles R in {0.5, 1, 2}: corrected estimate within
// 5% of 1/R (standard convention); the literal variant reports ~1/(2R).
void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream what;
  what << "curvature calibration:";
  for (double radius : {0.5, 1.0, 2.0}) {
    const ClosedContour c = make_circle(radius, 512);
    const DescriptorProfile corrected = compute_profile(c);
    DescriptorOptions literal;
    literal.self_chord_correction = false;
    const DescriptorProfile raw = compute_profile(c, literal);
    const double kappa = corrected.kappa_global[0];
    const double kappa_raw = raw.kappa_global[0];
    pass = pass && std::abs(kappa - 1.0 / radius) <= 0.05 / radius;
    pass = pass && std::abs(kappa_raw - 0.5 / radius) <= 0.05 / radius;
    what << " R=" << radius << ": " << kappa << " (literal " << kappa_raw << ")";
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 5.0;
  what << " in " << elapsed << "s";
  report(2, pass, what.str());
}

// View-function derivative identities, with first-order convergence in N.
void criterion_3() {
  ShapeSpec circle_spec;
  circle_spec.kind = ShapeKind::circle;
  const auto run = [](const ClosedContour& c, const Eigen::ArrayXd& kappa_paper) {
    return consistency_eq3_eq4(c, angle_terms(c, frames(c)), c.size() / 3, kappa_paper);
  };

  circle_spec.samples = 1024;
  const auto circle_report =
      run(make_circle(1.0, 1024), -analytic_curvature_profile(circle_spec, 1024));

  const ShapeSpec espec = parse_shape("ellipse:a=2,b=1");
  const auto ellipse_report = run(make_ellipse(1024), -analytic_curvature_profile(espec, 1024));

  // Convergence order from N = 512 -> 1024 on the ellipse.
  const auto coarse = run(make_ellipse(512), -analytic_curvature_profile(espec, 512));
  const double order_1 = std::log2(coarse.max_abs_first / ellipse_report.max_abs_first);
  const double order_2 = std::log2(coarse.max_abs_second / ellipse_report.max_abs_second);

  const bool pass = circle_report.max_abs_first <= 1e-3 && circle_report.max_abs_second <= 1e-2 &&
                    ellipse_report.max_abs_first <= 5e-2 && ellipse_report.max_abs_second <= 5e-2 &&
                    order_1 >= 1.0 && order_2 >= 1.0;
  std::ostringstream what;
  what << "view derivative identities: circle " << circle_report.max_abs_first << "/"
       << circle_report.max_abs_second << ", ellipse " << ellipse_report.max_abs_first << "/"
       << ellipse_report.max_abs_second << ", orders " << order_1 << "/" << order_2;
  report(3, pass, what.str());
}

// Rate identities for A and B on the ellipse at N = 1024.
void criterion_4() {
  const ShapeSpec espec = parse_shape("ellipse:a=2,b=1");
  const DescriptorProfile p = compute_profile(make_ellipse(1024));
  const auto rates = consistency_adot(p, -analytic_curvature_profile(espec, 1024));
  const bool pass = rates.rel_rms_a <= 0.05 && rates.rel_rms_b <= 0.05;
  std::ostringstream what;
  what << "A/B rate identities on the ellipse: rel RMS " << rates.rel_rms_a << " / "
       << rates.rel_rms_b;
  report(4, pass, what.str());
}

// Vertex detection: four ellipse vertices at the axis endpoints, none on the
// circle.
void criterion_5() {
  DetectOptions opt;
  opt.window = 2;
  const VertexSet ellipse_set = detect(compute_profile(make_ellipse(400)), opt);
  bool pass = ellipse_set.vertices.size() == 4;
  for (double target : {0.0, 100.0, 200.0, 300.0}) {
    pass = pass && nearest(ellipse_set, target) <= 2.0;
  }
  const VertexSet circle_set = detect(compute_profile(make_circle(1.0, 400)), opt);
  pass = pass && circle_set.vertices.empty();
  std::ostringstream what;
  what << "global vertices: ellipse " << ellipse_set.vertices.size() << " at axes, circle "
       << circle_set.vertices.size();
  report(5, pass, what.str());
}

// Noising paradox on the rounded rectangle: the smooth vertex set is contained
// in the noised-scenario union, every corner-arc center is found, and either a
// corner is missed by the smooth run alone or the sets are equal with improved
// localization.
void criterion_6() {
  const ShapeSpec spec = parse_shape("rounded_rect:w=2,h=1,rc=0.1");
  const ClosedContour rect = make_rect(400);
  const double window = 2.0;

  DetectOptions opt;
  opt.window = window;
  opt.source = "smooth";
  const VertexSet smooth_set = detect(compute_profile(rect), opt);

  NoiseConfig cfg;
  cfg.rho = 0.8;
  cfg.side = SidePolicy::alternate;
  cfg.iterations = 1;
  DetectOptions nopt = opt;
  nopt.source = "noise1";
  const VertexSet noised_set =
      detect(decimate_profile(compute_profile(noising(rect, cfg)), 2), nopt);
  const VertexSet merged = union_scenarios({smooth_set, noised_set}, window);

  bool contained = true;
  for (const Vertex& v : smooth_set.vertices) {
    contained = contained && nearest(merged, v.position) <= window;
  }

  const std::vector<double> corners = landmark_positions(spec);
  bool corners_found = true;
  double smooth_err = 0.0, union_err = 0.0;
  int smooth_missed = 0;
  for (double s : corners) {
    const double target = s / rect.ds();
    corners_found = corners_found && nearest(merged, target) <= 3.0;
    const double se = nearest(smooth_set, target);
    smooth_err += se;
    union_err += nearest(merged, target);
    if (se > 3.0) ++smooth_missed;
  }
  smooth_err /= static_cast<double>(corners.size());
  union_err /= static_cast<double>(corners.size());

  const bool equal_sets = smooth_set.vertices.size() == noised_set.vertices.size() &&
                          merged.vertices.size() == smooth_set.vertices.size();
  const bool branch_missed = smooth_missed > 0;
  const bool branch_improved = equal_sets && union_err < smooth_err;
  const bool pass = contained && corners_found && (branch_missed || branch_improved);

  std::ostringstream what;
  what << "noising paradox: smooth within union=" << (contained ? "yes" : "no")
       << ", corners within 3=" << (corners_found ? "yes" : "no") << ", branch=";
  if (branch_missed) {
    what << smooth_missed << " corner(s) missed by the smooth scenario alone";
  } else {
    what << "equal sets (" << smooth_set.vertices.size() << "), union corner error " << union_err
         << " vs smooth " << smooth_err << (branch_improved ? " (improved)" : " (NOT improved)");
  }
  report(6, pass, what.str());
}

// Noise stability of phi (perimeter-normalized) and the collapse of the
// discrete curvature, circle N = 256, one pass at rho = 1.0.
void criterion_7() {
  const ClosedContour base = make_circle(1.0, 256);
  const DescriptorProfile ps = compute_profile(base);
  NoiseConfig cfg;
  cfg.rho = 1.0;
  const ClosedContour noised = noising(base, cfg);
  const DescriptorProfile pn = decimate_profile(compute_profile(noised), 2);

  double worst = 0.0;
  for (int i = 0; i < 256; ++i) {
    const double a = ps.phi[i] / ps.perimeter;
    const double b = pn.phi[i] / pn.perimeter;
    worst = std::max(worst, std::abs(b - a) / a);
  }
  const double mean_before = fd_curvature(base).abs().mean();
  const double mean_after = fd_curvature(noised).abs().mean();
  const bool pass = worst <= 0.05 && mean_after >= 10.0 * mean_before;
  std::ostringstream what;
  what << "noise stability: max rel phi change " << worst * 100.0 << "%, fd |kappa| mean x"
       << mean_after / mean_before;
  report(7, pass, what.str());
}

// LAII baseline: half-plane and quarter-plane fractions, corner picks, and the
// end-to-end comparison run.
void criterion_8(const std::string& cli, const std::string& work) {
  const auto start = std::chrono::steady_clock::now();

  Points sq(4, 2);
  sq << 0, 0, 1, 0, 1, 1, 0, 1;
  const ClosedContour square = from_polyline(sq);
  const Raster raster = rasterize(square, 100.0, 20);
  Points probes(2, 2);
  probes << 0.5, 0.0, 0.0, 0.0;
  Points px(2, 2);
  for (int i = 0; i < 2; ++i) px.row(i) = raster.world_to_pixel(probes.row(i));
  const LaiiProfile lp = laii_profile(raster, px, 15);
  const bool fractions_ok =
      std::abs(lp.fraction[0] - 0.5) <= 0.02 && std::abs(lp.fraction[1] - 0.25) <= 0.05;

  const ShapeSpec spec = parse_shape("rounded_rect:w=2,h=1,rc=0.1");
  const ClosedContour rect = make_rect(100);
  const Raster rect_raster = rasterize(rect, 100.0, 20);
  Points samples(100, 2);
  for (int i = 0; i < 100; ++i) samples.row(i) = rect_raster.world_to_pixel(rect.points.row(i));
  const VertexSet picks = laii_vertices(laii_profile(rect_raster, samples, 15), 2);
  int corner_hits = 0;
  for (double s : landmark_positions(spec)) {
    const double target = s / rect.ds();
    for (const Vertex& v : picks.vertices) {
      if (v.label == VertexLabel::convex && circular_distance(v.position, target, 100) <= 3.0) {
        ++corner_hits;
        break;
      }
    }
  }

  // End-to-end comparison through the CLI.
  const std::string out = work + "/compare_run";
  const std::string command =
      cli + " compare rounded_rect:w=2,h=1,rc=0.1 --samples 100 --laii-radius 15 --out " + out +
      " > /dev/null 2>&1";
  const int rc = std::system(command.c_str());
  const bool compare_ok = rc == 0 && std::filesystem::exists(out + "/compare_summary.csv");

  const double elapsed = seconds_since(start);
  const bool pass = fractions_ok && corner_hits == 4 && compare_ok && elapsed < 30.0;
  std::ostringstream what;
  what << "LAII baseline: edge " << lp.fraction[0] << ", corner " << lp.fraction[1] << ", "
       << corner_hits << "/4 corner picks, compare rc=" << rc << ", " << elapsed << "s";
  report(8, pass, what.str());
}

// Local algebra: the table corpus and the crossing-migration law.
void criterion_9() {
  const auto germ = [](double slope, double constant) {
    std::vector<double> w;
    for (int k = -2; k <= 2; ++k) w.push_back(slope * k + constant);
    return w;
  };
  const auto germs_for = [&](LocalBehavior lb) -> std::vector<std::vector<double>> {
    switch (lb) {
      case LocalBehavior::zuc: return {germ(1.0, 0.0), germ(0.25, 0.0), germ(3.0, 0.0)};
      case LocalBehavior::zdc: return {germ(-1.0, 0.0), germ(-0.25, 0.0), germ(-3.0, 0.0)};
      case LocalBehavior::cz: return {germ(0.0, 0.0)};
      case LocalBehavior::nz: return {germ(0.0, 7.0), germ(0.0, -7.0), germ(0.05, 7.0)};
    }
    return {};
  };
  const LocalBehavior all[4] = {LocalBehavior::zuc, LocalBehavior::zdc, LocalBehavior::cz,
                                LocalBehavior::nz};
  bool tables_ok = true;
  int cells = 0;
  for (LocalBehavior a : all) {
    for (LocalBehavior b : all) {
      const TableEntry plus = oplus_table(a, b);
      const TableEntry times = otimes_table(a, b);
      for (const auto& f : germs_for(a)) {
        for (const auto& g : germs_for(b)) {
          const LocalBehavior sum = oplus(a, b, f, g, 1e-6);
          const LocalBehavior product = otimes(a, b, f, g, 1e-3);
          tables_ok = tables_ok && plus.admits(sum) && times.admits(product);
          if (plus.unambiguous()) tables_ok = tables_ok && plus.main.matches(sum);
          if (times.unambiguous() && !times.main.generic_zc) {
            tables_ok = tables_ok && times.main.matches(product);
          }
        }
      }
      cells += 2;
    }
  }

  // Migration: the crossing of K(x - c) + 0.3 approaches c monotonically.
  const double c = 5.0;
  double previous = 1e18;
  bool monotone = true;
  double first = 0.0, last = 0.0;
  for (double gain : {1.0, 10.0, 100.0, 1000.0}) {
    Eigen::ArrayXd f(16);
    for (int i = 0; i < 16; ++i) f[i] = gain * (i - c) + 0.3;
    double measured = 1e18;
    for (const auto& zc : zero_crossings(f, 1e-12)) {
      if (!zc.plateau) measured = std::min(measured, std::abs(zc.position - c));
    }
    monotone = monotone && measured <= previous;
    previous = measured;
    if (gain == 1.0) first = measured;
    last = measured;
  }
  const bool tighten = first / last >= 50.0;

  const bool pass = tables_ok && monotone && tighten;
  std::ostringstream what;
  what << "local algebra: " << cells << " table cells verified, migration x" << first / last;
  report(9, pass, what.str());
}

// Determinism: byte-identical CSVs across repeated runs and across thread counts.
void criterion_10(const std::string& cli, const std::string& work) {
  const auto read_all = [](const std::string& dir) {
    std::ostringstream all;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      std::ifstream in(file, std::ios::binary);
      all << file.filename().string() << "\n" << in.rdbuf() << "\n";
    }
    return all.str();
  };
  const auto run = [&](const std::string& dir, int threads) {
    std::ostringstream cmd;
    cmd << "GLOBVERT_THREADS=" << threads << " " << cli
        << " vertices star:base=1,a=0.3,k=5 --samples 200 --scenarios 2 --side rand --seed 7 "
        << "--out " << dir << " > /dev/null 2>&1";
    return std::system(cmd.str().c_str());
  };

  const std::string d1 = work + "/det1", d2 = work + "/det2", d3 = work + "/det3";
  const int max_threads = static_cast<int>(std::thread::hardware_concurrency());
  bool pass = run(d1, 1) == 0 && run(d2, 1) == 0 && run(d3, std::max(2, max_threads)) == 0;
  if (pass) {
    const std::string a = read_all(d1);
    pass = !a.empty() && a == read_all(d2) && a == read_all(d3);
  }
  report(10, pass,
         "determinism: identical manifests give byte-identical outputs across runs and thread "
         "counts");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "./tools/globvert";
  const std::string work = argc > 2 ? argv[2] : "acceptance_out";
  std::filesystem::create_directories(work);

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(cli, work);
  criterion_9();
  criterion_10(cli, work);

  if (failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
