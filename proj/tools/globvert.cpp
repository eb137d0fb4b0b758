// globvert: global distance-integral curvature descriptors, global-vertex
// detection with noising scenarios, and the LAII baseline, on closed planar
// contours given as shape grammar strings, polyline CSVs or PGM rasters.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <globvert/contour.hpp>
#include <globvert/descriptors.hpp>
#include <globvert/io.hpp>
#include <globvert/laii.hpp>
#include <globvert/perturb.hpp>
#include <globvert/raster.hpp>
#include <globvert/shapes.hpp>
#include <globvert/svg.hpp>
#include <globvert/vertices.hpp>

namespace gv = globvert;

namespace {

struct Options {
  std::string input;
  int samples = 100;
  double window = 0.0;  // 0 = auto: ceil(samples / 50)
  double rho = 0.8;
  int noise_iters = 1;
  std::string side = "alt";
  uint64_t seed = 0;
  int scenarios = 1;
  bool paper_sign = false;
  bool no_self_correction = false;
  std::optional<double> slope_min;
  std::string out_dir = ".";
  std::string format = "csv";
  int threshold = 128;
  double scale = 0.0;  // 0 = auto: ~200 px across
  int laii_radius = 15;
  int smooth_window = 0;
  int smooth_passes = 0;
};

gv::SidePolicy parse_side(const std::string& side) {
  if (side == "alt") return gv::SidePolicy::alternate;
  if (side == "in") return gv::SidePolicy::interior;
  if (side == "out") return gv::SidePolicy::exterior;
  if (side == "rand") return gv::SidePolicy::random;
  gv::fail(gv::ErrorKind::config, "BadSide", "side must be one of alt,in,out,rand");
}

double effective_window(const Options& opt) {
  return opt.window > 0.0 ? opt.window : gv::default_window(opt.samples);
}

gv::DescriptorOptions descriptor_options(const Options& opt) {
  gv::DescriptorOptions d;
  d.self_chord_correction = !opt.no_self_correction;
  d.sign = opt.paper_sign ? gv::SignConvention::paper : gv::SignConvention::standard;
  return d;
}

gv::NoiseConfig noise_config(const Options& opt, int iterations, uint64_t seed_offset) {
  gv::NoiseConfig cfg;
  cfg.rho = opt.rho;
  cfg.iterations = iterations;
  cfg.side = parse_side(opt.side);
  cfg.seed = opt.seed + seed_offset;
  return cfg;
}

bool ends_with(const std::string& text, const std::string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Raw boundary points of the input: generated shape, polyline CSV, or traced
/// PGM foreground.
gv::Points resolve_points(const Options& opt) {
  if (gv::looks_like_shape(opt.input)) {
    gv::ShapeSpec spec = gv::parse_shape(opt.input);
    spec.samples = opt.samples;
    return gv::generate(spec).points;
  }
  if (!std::filesystem::exists(opt.input)) {
    gv::fail(gv::ErrorKind::input, "InputUnresolvable", "no such file: " + opt.input);
  }
  if (ends_with(opt.input, ".pgm")) {
    return gv::trace_boundary(gv::read_pgm(opt.input), opt.threshold);
  }
  return gv::read_polyline_csv(opt.input);
}

gv::ClosedContour resolve_contour(const Options& opt) {
  return gv::resample_uniform(gv::from_polyline(resolve_points(opt)), opt.samples);
}

std::optional<gv::ShapeSpec> resolve_shape(const Options& opt) {
  if (!gv::looks_like_shape(opt.input)) return std::nullopt;
  gv::ShapeSpec spec = gv::parse_shape(opt.input);
  spec.samples = opt.samples;
  return spec;
}

double effective_scale(const Options& opt, const gv::ClosedContour& contour) {
  if (opt.scale > 0.0) return opt.scale;
  const double span = std::max(
      contour.points.col(0).maxCoeff() - contour.points.col(0).minCoeff(),
      contour.points.col(1).maxCoeff() - contour.points.col(1).minCoeff());
  return span > 0.0 ? 200.0 / span : 1.0;
}

gv::Manifest make_manifest(const char* command, const Options& opt) {
  gv::Manifest m;
  m.add("command", command);
  m.add("input", opt.input);
  m.add("samples", opt.samples);
  m.add("window", effective_window(opt));
  m.add("scenarios", opt.scenarios);
  m.add("rho", opt.rho);
  m.add("noise_iters", opt.noise_iters);
  m.add("side", opt.side);
  m.add("seed", static_cast<int>(opt.seed));
  m.add("self_chord_correction", opt.no_self_correction ? "off" : "on");
  m.add("sign", opt.paper_sign ? "paper" : "standard");
  m.add("slope_min", opt.slope_min ? gv::format_double(*opt.slope_min) : std::string("none"));
  m.add("format", opt.format);
  return m;
}

std::string out_path(const Options& opt, const std::string& name) {
  std::filesystem::create_directories(opt.out_dir);
  return (std::filesystem::path(opt.out_dir) / name).string();
}

struct Scenario {
  std::string id;
  gv::DescriptorProfile profile;
};

/// The un-noised profile plus one profile per noising depth, all indexed on
/// the base N samples: integrals run over the full noised boundary, values
/// are taken at the preserved original points.
std::vector<Scenario> run_scenarios(const gv::ClosedContour& base, const Options& opt) {
  std::vector<Scenario> out;
  const gv::DescriptorOptions dopt = descriptor_options(opt);
  out.push_back({"smooth", gv::compute_profile(base, dopt)});
  for (int j = 1; j <= opt.scenarios; ++j) {
    const gv::ClosedContour noised =
        gv::noising(base, noise_config(opt, j, static_cast<uint64_t>(j)));
    const int stride = noised.size() / base.size();
    out.push_back({"noise" + std::to_string(j),
                   gv::decimate_profile(gv::compute_profile(noised, dopt), stride)});
  }
  return out;
}

gv::VertexSet detect_scenario(const Scenario& scenario, const Options& opt) {
  gv::DetectOptions d;
  d.window = effective_window(opt);
  d.slope_min = opt.slope_min;
  d.source = scenario.id;
  return gv::detect(scenario.profile, d);
}

// ---- subcommands ----

int cmd_trace(const Options& opt) {
  const gv::Points boundary = resolve_points(opt);
  gv::write_polyline_csv(out_path(opt, "boundary.csv"), boundary, make_manifest("trace", opt));
  std::cout << "traced " << boundary.rows() << " boundary points\n";
  return 0;
}

int cmd_resample(const Options& opt) {
  const gv::ClosedContour contour = resolve_contour(opt);
  gv::write_polyline_csv(out_path(opt, "contour.csv"), contour.points,
                         make_manifest("resample", opt));
  std::cout << "resampled to " << contour.size() << " points, perimeter " << contour.perimeter
            << "\n";
  return 0;
}

int cmd_noise(const Options& opt) {
  const gv::ClosedContour contour = resolve_contour(opt);
  if (opt.smooth_passes > 0) {
    const gv::ClosedContour smoothed =
        gv::smooth(contour, opt.smooth_window > 0 ? opt.smooth_window : 5, opt.smooth_passes);
    gv::write_polyline_csv(out_path(opt, "smoothed.csv"), smoothed.points,
                           make_manifest("noise", opt));
    std::cout << "smoothed contour written\n";
    return 0;
  }
  const gv::ClosedContour noised = gv::noising(contour, noise_config(opt, opt.noise_iters, 0));
  gv::write_polyline_csv(out_path(opt, "noised.csv"), noised.points, make_manifest("noise", opt));
  std::cout << "noised contour: " << noised.size() << " points, perimeter " << noised.perimeter
            << "\n";
  return 0;
}

int cmd_descriptors(const Options& opt) {
  const gv::ClosedContour contour = resolve_contour(opt);
  const gv::DescriptorProfile profile = gv::compute_profile(contour, descriptor_options(opt));
  const gv::Manifest manifest = make_manifest("descriptors", opt);
  gv::write_profile_csv(out_path(opt, "profile.csv"), profile, manifest);
  if (opt.format == "json") {
    gv::write_profile_json(out_path(opt, "profile.json"), profile, manifest);
  }
  gv::write_text_file(out_path(opt, "profile.svg"), gv::profile_panels_svg(profile, opt.input));
  std::cout << "profile written: N=" << profile.n << ", phi[0]=" << profile.phi[0] << "\n";
  return 0;
}

int cmd_vertices(const Options& opt) {
  const gv::ClosedContour base = resolve_contour(opt);
  const gv::Manifest manifest = make_manifest("vertices", opt);
  const std::vector<Scenario> scenarios = run_scenarios(base, opt);

  std::vector<gv::VertexSet> sets;
  for (const Scenario& scenario : scenarios) {
    sets.push_back(detect_scenario(scenario, opt));
    gv::write_vertices_csv(out_path(opt, "vertices_" + scenario.id + ".csv"), sets.back(),
                           manifest);
  }
  const gv::VertexSet merged = gv::union_scenarios(sets, effective_window(opt));
  gv::write_vertices_csv(out_path(opt, "vertices_union.csv"), merged, manifest);
  gv::write_text_file(out_path(opt, "overlay.svg"),
                      gv::contour_overlay_svg(base, merged, opt.input));
  std::cout << "vertices: union of " << sets.size() << " scenarios has "
            << merged.vertices.size() << " entries\n";
  return 0;
}

int cmd_laii(const Options& opt) {
  const gv::ClosedContour contour = resolve_contour(opt);
  const double scale = effective_scale(opt, contour);
  const gv::Raster raster = gv::rasterize(contour, scale, opt.laii_radius + 5);
  if (raster.undersampled) {
    std::cerr << "warning: ScaleTooSmall, features thinner than 2 px collapse\n";
  }
  gv::Points samples(contour.size(), 2);
  for (int i = 0; i < contour.size(); ++i) {
    samples.row(i) = raster.world_to_pixel(contour.points.row(i));
  }
  const gv::LaiiProfile profile = gv::laii_profile(raster, samples, opt.laii_radius);
  const gv::VertexSet picks =
      gv::laii_vertices(profile, static_cast<int>(effective_window(opt)));

  const gv::Manifest manifest = make_manifest("laii", opt);
  gv::write_pgm(out_path(opt, "raster.pgm"), raster);
  {
    std::ostringstream csv;
    csv << manifest.header_lines() << "index,fraction\n";
    for (int i = 0; i < contour.size(); ++i) {
      csv << i << "," << gv::format_double(profile.fraction[i]) << "\n";
    }
    gv::write_text_file(out_path(opt, "laii_profile.csv"), csv.str());
  }
  gv::write_vertices_csv(out_path(opt, "laii_vertices.csv"), picks, manifest);
  gv::write_text_file(out_path(opt, "laii_overlay.svg"),
                      gv::contour_overlay_svg(contour, picks, opt.input + " (laii)"));
  std::cout << "laii: " << picks.vertices.size() << " extrema\n";
  return 0;
}

// Strict local extrema of the discrete curvature: the traditional picker the
// comparison report sets against the global detector.
gv::VertexSet fd_extrema(const gv::ClosedContour& contour, double window) {
  const Eigen::ArrayXd kappa = gv::fd_curvature(contour);
  const int n = contour.size();
  const int w = std::max(1, static_cast<int>(window));
  const double margin = 1e-9 * kappa.abs().maxCoeff();
  gv::VertexSet set;
  set.n = n;
  for (int i = 0; i < n; ++i) {
    bool is_min = true, is_max = true;
    for (int k = 1; k <= w; ++k) {
      const double lo = kappa[gv::circular_index(i - k, n)];
      const double hi = kappa[gv::circular_index(i + k, n)];
      if (kappa[i] >= lo - margin || kappa[i] >= hi - margin) is_min = false;
      if (kappa[i] <= lo + margin || kappa[i] <= hi + margin) is_max = false;
      if (!is_min && !is_max) break;
    }
    if (!is_min && !is_max) continue;
    gv::Vertex v;
    v.position = i;
    v.window = window;
    v.kappa_at = kappa[i];
    v.label = kappa[i] > 0.0 ? gv::VertexLabel::convex : gv::VertexLabel::concave;
    v.sources = {"fd"};
    set.vertices.push_back(v);
  }
  return set;
}

int cmd_compare(const Options& opt) {
  const gv::ClosedContour base = resolve_contour(opt);
  const double window = effective_window(opt);
  const std::optional<gv::ShapeSpec> shape = resolve_shape(opt);
  const std::vector<double> landmarks =
      shape ? gv::landmark_positions(*shape) : std::vector<double>{};

  const gv::ClosedContour noised = gv::noising(base, noise_config(opt, opt.noise_iters, 1));
  struct Variant {
    std::string id;
    const gv::ClosedContour* full;
  };
  const std::vector<Variant> variants = {{"smooth", &base}, {"noised", &noised}};

  std::ostringstream csv;
  csv << make_manifest("compare", opt).header_lines();
  csv << "variant,method,position,label\n";
  std::ostringstream summary;
  summary << "variant,method,count,mean_err,max_err\n";

  for (const Variant& variant : variants) {
    const int stride = variant.full->size() / base.size();
    gv::DescriptorProfile profile = gv::compute_profile(*variant.full, descriptor_options(opt));
    if (stride > 1) profile = gv::decimate_profile(profile, stride);
    gv::DetectOptions dopt;
    dopt.window = window;
    dopt.slope_min = opt.slope_min;
    dopt.source = variant.id;
    const gv::VertexSet global = gv::detect(profile, dopt);

    const double scale = effective_scale(opt, base);
    const gv::Raster raster = gv::rasterize(*variant.full, scale, opt.laii_radius + 5);
    gv::Points samples(base.size(), 2);
    for (int i = 0; i < base.size(); ++i) {
      samples.row(i) = raster.world_to_pixel(base.points.row(i));
    }
    const gv::VertexSet laii = gv::laii_vertices(
        gv::laii_profile(raster, samples, opt.laii_radius), static_cast<int>(window));
    const gv::VertexSet fd = fd_extrema(*variant.full, window * stride);

    struct Method {
      std::string id;
      const gv::VertexSet* set;
      double position_scale;
    };
    const std::vector<Method> methods = {
        {"global", &global, 1.0}, {"laii", &laii, 1.0}, {"fd", &fd, 1.0 / stride}};
    for (const Method& method : methods) {
      double mean_err = 0.0, max_err = 0.0;
      for (const gv::Vertex& v : method.set->vertices) {
        csv << variant.id << "," << method.id << ","
            << gv::format_double(v.position * method.position_scale) << ","
            << (v.label == gv::VertexLabel::convex ? "convex" : "concave") << "\n";
      }
      if (!landmarks.empty()) {
        for (double s : landmarks) {
          const double target = s / base.ds();
          double best = static_cast<double>(base.size());
          for (const gv::Vertex& v : method.set->vertices) {
            best = std::min(best, gv::circular_distance(v.position * method.position_scale,
                                                        target, base.size()));
          }
          mean_err += best;
          max_err = std::max(max_err, best);
        }
        mean_err /= static_cast<double>(landmarks.size());
      }
      summary << variant.id << "," << method.id << "," << method.set->vertices.size() << ","
              << gv::format_double(mean_err) << "," << gv::format_double(max_err) << "\n";
    }
  }

  gv::write_text_file(out_path(opt, "compare.csv"), csv.str());
  gv::write_text_file(out_path(opt, "compare_summary.csv"), summary.str());
  std::cout << summary.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global curvature descriptors and global vertices on closed contours"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input,
                    "shape grammar (circle:R=1, ellipse:a=2,b=1, rounded_rect:w=2,h=1,rc=0.1, "
                    "star:base=1,a=0.3,k=5), polyline .csv, or .pgm raster")
        ->required();
    sub->add_option("--samples", opt.samples, "analysis sample count")->capture_default_str();
    sub->add_option("--window", opt.window, "co-localization window in samples (0 = auto)");
    sub->add_option("--rho", opt.rho, "noising radius factor (> 0.5)")->capture_default_str();
    sub->add_option("--noise-iters", opt.noise_iters, "noising recursion depth")
        ->capture_default_str();
    sub->add_option("--side", opt.side, "insertion side: alt, in, out, rand")
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "seed for the random side policy")->capture_default_str();
    sub->add_option("--scenarios", opt.scenarios, "number of noising scenarios")
        ->capture_default_str();
    sub->add_flag("--paper-sign", opt.paper_sign,
                  "flip the curvature sign: positive when the inward normal points away from "
                  "the center of curvature");
    sub->add_flag("--no-self-correction", opt.no_self_correction,
                  "disable the self-chord correction of the curvature estimate");
    sub->add_option_function<double>(
        "--slope-min", [&opt](double v) { opt.slope_min = v; },
        "minimum slope of the third-derivative crossing");
    sub->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
    sub->add_option("--format", opt.format, "csv or json")->capture_default_str();
    sub->add_option("--threshold", opt.threshold, "PGM foreground threshold")
        ->capture_default_str();
    sub->add_option("--scale", opt.scale, "raster pixels per unit (0 = auto)");
    sub->add_option("--laii-radius", opt.laii_radius, "LAII disk radius in pixels")
        ->capture_default_str();
    sub->add_option("--smooth-window", opt.smooth_window, "moving-average window (noise command)");
    sub->add_option("--smooth-passes", opt.smooth_passes, "moving-average passes (noise command)");
  };

  add_common(app.add_subcommand("trace", "extract a raster boundary loop"));
  add_common(app.add_subcommand("resample", "uniform arc-length resampling"));
  add_common(app.add_subcommand("descriptors", "distance-integral descriptor profile"));
  add_common(app.add_subcommand("vertices", "global vertices across noising scenarios"));
  add_common(app.add_subcommand("noise", "additive noising (or smoothing) preprocessor"));
  add_common(app.add_subcommand("laii", "local area integral invariant baseline"));
  add_common(app.add_subcommand("compare", "global detector vs LAII vs discrete curvature"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("trace")) return cmd_trace(opt);
    if (app.got_subcommand("resample")) return cmd_resample(opt);
    if (app.got_subcommand("descriptors")) return cmd_descriptors(opt);
    if (app.got_subcommand("vertices")) return cmd_vertices(opt);
    if (app.got_subcommand("noise")) return cmd_noise(opt);
    if (app.got_subcommand("laii")) return cmd_laii(opt);
    if (app.got_subcommand("compare")) return cmd_compare(opt);
  } catch (const gv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case gv::ErrorKind::config: return 2;
      case gv::ErrorKind::input: return 3;
      case gv::ErrorKind::numeric: return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
