#include <globvert/vertices.hpp>

#include <algorithm>
#include <cmath>

namespace globvert {

namespace {

// Crossing-scan tolerance with a floor derived from phi's own scale, so a
// rotationally symmetric shape (phi constant up to rounding) collapses to a
// plateau instead of spraying noise crossings.
double crossing_eps(const Eigen::ArrayXd& signal, double phi_scale, double length_power,
                    double perimeter, double eps_scale) {
  const double floor_scale = phi_scale / std::pow(perimeter, length_power);
  return eps_scale * std::max(signal.abs().maxCoeff(), floor_scale);
}

// Circular mean of cluster member positions, unwrapped around the first member.
double cluster_position(const std::vector<const Vertex*>& members, int n) {
  const double ref = members.front()->position;
  double sum = 0.0;
  for (const Vertex* v : members) {
    double p = v->position;
    while (p - ref > 0.5 * n) p -= n;
    while (ref - p > 0.5 * n) p += n;
    sum += p;
  }
  double mean = sum / static_cast<double>(members.size());
  while (mean < 0.0) mean += n;
  while (mean >= n) mean -= n;
  return mean;
}

std::vector<Vertex> cluster_vertices(std::vector<Vertex> items, double window, int n) {
  if (items.empty()) return items;

  // Keep the submission order: the first-listed scenario (the un-noised one in
  // the union pipeline) supplies the representative label and curvature.
  struct Tagged {
    const Vertex* vertex;
    size_t order;
  };
  std::vector<Tagged> tagged;
  tagged.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) tagged.push_back({&items[i], i});
  std::sort(tagged.begin(), tagged.end(), [](const Tagged& a, const Tagged& b) {
    return a.vertex->position < b.vertex->position;
  });

  // Group consecutive items within the window, then merge the wrap-around pair.
  std::vector<std::vector<Tagged>> groups;
  for (const Tagged& t : tagged) {
    if (!groups.empty() &&
        circular_distance(groups.back().back().vertex->position, t.vertex->position, n) <= window) {
      groups.back().push_back(t);
    } else {
      groups.push_back({t});
    }
  }
  if (groups.size() > 1 &&
      circular_distance(groups.back().back().vertex->position,
                        groups.front().front().vertex->position, n) <= window) {
    auto& first = groups.front();
    first.insert(first.begin(), groups.back().begin(), groups.back().end());
    groups.pop_back();
  }

  std::vector<Vertex> merged;
  merged.reserve(groups.size());
  for (const auto& group : groups) {
    const Tagged* representative = &group.front();
    std::vector<const Vertex*> members;
    for (const Tagged& t : group) {
      members.push_back(t.vertex);
      if (t.order < representative->order) representative = &t;
    }
    Vertex out = *representative->vertex;
    out.position = cluster_position(members, n);
    out.sources.clear();
    for (const Tagged& t : group) {
      for (const std::string& s : t.vertex->sources) {
        if (std::find(out.sources.begin(), out.sources.end(), s) == out.sources.end()) {
          out.sources.push_back(s);
        }
      }
    }
    merged.push_back(std::move(out));
  }
  std::sort(merged.begin(), merged.end(),
            [](const Vertex& a, const Vertex& b) { return a.position < b.position; });
  return merged;
}

}  // namespace

VertexSet detect(const DescriptorProfile& profile, const DetectOptions& options) {
  if (profile.n < 8) fail(ErrorKind::config, "EmptyProfile", "profile has too few samples");
  if (options.window < 1.0) fail(ErrorKind::config, "BadWindow", "window must be at least 1 sample");

  const int n = profile.n;
  const double phi_scale = profile.phi.abs().maxCoeff();
  const double eps1 =
      crossing_eps(profile.phi_d1, phi_scale, 1.0, profile.perimeter, options.eps_scale);
  const double eps3 =
      crossing_eps(profile.phi_d3, phi_scale, 3.0, profile.perimeter, options.eps_scale);

  const auto d1_crossings = zero_crossings(profile.phi_d1, eps1);
  const auto d3_crossings = zero_crossings(profile.phi_d3, eps3);

  // A zero run that fits inside the co-localization window is an ordinary
  // crossing that happens to touch the grid; wider runs are true plateaus
  // (locally constant curvature) and need the explicit opt-in.
  const auto usable = [&options](const ZeroCrossing& zc) {
    if (!zc.through_zero()) return false;
    if (!zc.plateau) return true;
    return zc.run_length <= options.window || options.allow_plateaus;
  };

  VertexSet set;
  set.n = n;
  for (const ZeroCrossing& anchor : d1_crossings) {
    if (!usable(anchor)) continue;

    // Nearest phi''' crossing inside the window; equidistant ties go to the
    // steeper one.
    const ZeroCrossing* partner = nullptr;
    double best = options.window + 1.0;
    for (const ZeroCrossing& zc : d3_crossings) {
      if (!usable(zc)) continue;
      if (options.slope_min && std::abs(zc.slope) < *options.slope_min) continue;
      const double d = circular_distance(anchor.position, zc.position, n);
      if (d > options.window) continue;
      if (!partner || d < best ||
          (d == best && std::abs(zc.slope) > std::abs(partner->slope))) {
        partner = &zc;
        best = d;
      }
    }
    if (!partner) continue;

    Vertex v;
    v.position = anchor.position;
    v.window = options.window;
    v.sources = {options.source};
    set.vertices.push_back(std::move(v));
  }

  label_vertices(set, profile);
  set.vertices = cluster_vertices(std::move(set.vertices), options.window, n);
  return set;
}

void label_vertices(VertexSet& set, const DescriptorProfile& profile) {
  const int n = profile.n;
  const double to_standard = profile.options.sign == SignConvention::paper ? -1.0 : 1.0;
  const double correction = profile.options.self_chord_correction ? 2.0 : 0.0;

  for (Vertex& v : set.vertices) {
    const int center = circular_index(static_cast<int>(std::lround(v.position)), n);
    int found = -1;
    for (int radius = 0; radius <= n / 2 && found < 0; ++radius) {
      const int lo = circular_index(center - radius, n);
      const int hi = circular_index(center + radius, n);
      if (profile.kappa_defined[hi]) found = hi;
      else if (profile.kappa_defined[lo]) found = lo;
    }
    if (found >= 0) {
      v.kappa_at = profile.kappa_global[found];
      v.kappa_fallback = false;
      const double kappa_std = to_standard * v.kappa_at;
      v.label = kappa_std > 0.0 ? VertexLabel::convex : VertexLabel::concave;
    } else {
      // Sign-only fallback: kappa_paper = (phi'' - B - correction) / A.
      const double numer = profile.phi_d2[center] - profile.B[center] - correction;
      const double sign_paper = (numer >= 0.0 ? 1.0 : -1.0) * (profile.A[center] >= 0.0 ? 1.0 : -1.0);
      v.kappa_at = 0.0;
      v.kappa_fallback = true;
      v.label = -sign_paper > 0.0 ? VertexLabel::convex : VertexLabel::concave;
    }
  }
}

VertexSet union_scenarios(const std::vector<VertexSet>& sets, double window) {
  VertexSet out;
  if (sets.empty()) return out;
  out.n = sets.front().n;
  std::vector<Vertex> pool;
  for (const VertexSet& s : sets) {
    if (s.n != out.n) fail(ErrorKind::config, "MismatchedN", "scenario sets use different sample counts");
    pool.insert(pool.end(), s.vertices.begin(), s.vertices.end());
  }
  out.vertices = cluster_vertices(std::move(pool), window, out.n);
  return out;
}

}  // namespace globvert
