#include <globvert/descriptors.hpp>

#include <cmath>
#include <limits>

#include <globvert/parallel.hpp>

namespace globvert {

namespace {

void require_uniform(const ClosedContour& contour, const char* who) {
  if (contour.size() < 8) fail(ErrorKind::config, "NTooSmall", std::string(who) + " needs at least 8 samples");
  if (!contour.uniform) fail(ErrorKind::config, "NotUniform", std::string(who) + " needs a uniformly resampled contour");
}

// One pairwise term. The expressions here are the single source of truth for
// the chord geometry: the sign of sin(w) is pinned by the identity
// d/ds v_xi(s) = -sin(w), which for a counterclockwise loop with left inward
// normal means sin(w) = t . (-rhat) and cos(w) = n . (-r hat).
struct PairTerm {
  double dist, cosw, sinw;
};

inline PairTerm pair_term(const Points& p, const Points& tangent, const Points& normal,
                          int i, int j, double min_dist) {
  const double ux = p(j, 0) - p(i, 0);
  const double uy = p(j, 1) - p(i, 1);
  const double dist = std::sqrt(ux * ux + uy * uy);
  if (dist < min_dist) {
    fail(ErrorKind::numeric, "CoincidentSamples",
         "samples " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  }
  PairTerm t;
  t.dist = dist;
  t.cosw = (normal(i, 0) * ux + normal(i, 1) * uy) / dist;
  t.sinw = (tangent(i, 0) * ux + tangent(i, 1) * uy) / dist;
  return t;
}

constexpr double kMinChord = 1e-12;

}  // namespace

AngleTerms angle_terms(const ClosedContour& contour, const FrameField& f) {
  require_uniform(contour, "angle_terms");
  const int n = contour.size();
  AngleTerms terms;
  terms.cos_omega.setZero(n, n);
  terms.sin_omega.setZero(n, n);
  terms.r_norm.setZero(n, n);
  const Points& p = contour.points;
  parallel_for(n, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      for (int k = 1; k < n; ++k) {
        const int j = (i + k) % n;
        const PairTerm t = pair_term(p, f.tangent, f.normal, i, j, kMinChord);
        terms.r_norm(i, j) = t.dist;
        terms.cos_omega(i, j) = t.cosw;
        terms.sin_omega(i, j) = t.sinw;
      }
    }
  });
  return terms;
}

Eigen::ArrayXd var_profile(const ClosedContour& contour, const AngleTerms& terms) {
  require_uniform(contour, "var_profile");
  const int n = contour.size();
  const double ds = contour.ds();
  Eigen::ArrayXd phi(n);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int k = 1; k < n; ++k) sum += terms.r_norm(i, (i + k) % n);
    phi[i] = sum * ds;
  }
  return phi;
}

void derivatives(const Eigen::ArrayXd& phi, double ds,
                 Eigen::ArrayXd& d1, Eigen::ArrayXd& d2, Eigen::ArrayXd& d3) {
  const int n = static_cast<int>(phi.size());
  d1.resize(n);
  d2.resize(n);
  d3.resize(n);
  const double inv2 = 1.0 / (2.0 * ds);
  const double inv_sq = 1.0 / (ds * ds);
  const double inv2_cu = 1.0 / (2.0 * ds * ds * ds);
  for (int i = 0; i < n; ++i) {
    const double pm2 = phi[circular_index(i - 2, n)];
    const double pm1 = phi[circular_index(i - 1, n)];
    const double p0 = phi[i];
    const double pp1 = phi[circular_index(i + 1, n)];
    const double pp2 = phi[circular_index(i + 2, n)];
    d1[i] = (pp1 - pm1) * inv2;
    d2[i] = (pp1 - 2.0 * p0 + pm1) * inv_sq;
    d3[i] = (-pm2 + 2.0 * pm1 - 2.0 * pp1 + pp2) * inv2_cu;
  }
}

IntegralDescriptors integral_descriptors(const ClosedContour& contour, const AngleTerms& terms) {
  require_uniform(contour, "integral_descriptors");
  const int n = contour.size();
  const double ds = contour.ds();
  IntegralDescriptors out;
  out.A.resize(n);
  out.B.resize(n);
  out.C.resize(n);
  out.D.resize(n);
  for (int i = 0; i < n; ++i) {
    double sa = 0.0, sb = 0.0, sc = 0.0, sd = 0.0;
    for (int k = 1; k < n; ++k) {
      const int j = (i + k) % n;
      const double dist = terms.r_norm(i, j);
      const double cw = terms.cos_omega(i, j);
      const double sw = terms.sin_omega(i, j);
      sa += cw;
      sb += cw * cw / dist;
      sc += sw * cw / dist;
      sd += cw * cw * sw / (dist * dist);
    }
    out.A[i] = sa * ds;
    out.B[i] = sb * ds;
    out.C[i] = 3.0 * sc * ds;
    out.D[i] = 3.0 * sd * ds;
  }
  return out;
}

void curvature_estimate(DescriptorProfile& profile) {
  const int n = profile.n;
  const double correction = profile.options.self_chord_correction ? 2.0 : 0.0;
  const double eps_a = profile.options.a_threshold_scale * profile.perimeter;
  const double flip = profile.options.sign == SignConvention::standard ? -1.0 : 1.0;
  profile.kappa_global.resize(n);
  profile.kappa_defined.resize(n);
  int defined = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(profile.A[i]) > eps_a) {
      const double kappa_paper = (profile.phi_d2[i] - profile.B[i] - correction) / profile.A[i];
      profile.kappa_global[i] = flip * kappa_paper;
      profile.kappa_defined[i] = true;
      ++defined;
    } else {
      profile.kappa_global[i] = std::numeric_limits<double>::quiet_NaN();
      profile.kappa_defined[i] = false;
    }
  }
  if (defined == 0) fail(ErrorKind::numeric, "AllUndefined", "curvature estimate undefined at every sample");
}

DescriptorProfile compute_profile(const ClosedContour& contour, const DescriptorOptions& options) {
  require_uniform(contour, "compute_profile");
  const FrameField f = frames(contour);
  const int n = contour.size();
  const double ds = contour.ds();
  const Points& p = contour.points;

  DescriptorProfile profile;
  profile.n = n;
  profile.ds = ds;
  profile.perimeter = contour.perimeter;
  profile.options = options;
  profile.phi.resize(n);
  profile.A.resize(n);
  profile.B.resize(n);
  profile.C.resize(n);
  profile.D.resize(n);

  parallel_for(n, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      double sum_phi = 0.0, sa = 0.0, sb = 0.0, sc = 0.0, sd = 0.0;
      for (int k = 1; k < n; ++k) {
        const int j = (i + k) % n;
        const PairTerm t = pair_term(p, f.tangent, f.normal, i, j, kMinChord);
        sum_phi += t.dist;
        sa += t.cosw;
        sb += t.cosw * t.cosw / t.dist;
        sc += t.sinw * t.cosw / t.dist;
        sd += t.cosw * t.cosw * t.sinw / (t.dist * t.dist);
      }
      profile.phi[i] = sum_phi * ds;
      profile.A[i] = sa * ds;
      profile.B[i] = sb * ds;
      profile.C[i] = 3.0 * sc * ds;
      profile.D[i] = 3.0 * sd * ds;
    }
  });

  derivatives(profile.phi, ds, profile.phi_d1, profile.phi_d2, profile.phi_d3);
  curvature_estimate(profile);
  return profile;
}

DescriptorProfile decimate_profile(const DescriptorProfile& profile, int stride) {
  if (stride < 1 || profile.n % stride != 0) {
    fail(ErrorKind::config, "BadStride", "stride must divide the sample count");
  }
  if (stride == 1) return profile;
  DescriptorProfile out;
  out.n = profile.n / stride;
  out.ds = profile.ds * stride;
  out.perimeter = profile.perimeter;
  out.options = profile.options;
  out.phi.resize(out.n);
  out.A.resize(out.n);
  out.B.resize(out.n);
  out.C.resize(out.n);
  out.D.resize(out.n);
  for (int i = 0; i < out.n; ++i) {
    const int j = i * stride;
    out.phi[i] = profile.phi[j];
    out.A[i] = profile.A[j];
    out.B[i] = profile.B[j];
    out.C[i] = profile.C[j];
    out.D[i] = profile.D[j];
  }
  derivatives(out.phi, out.ds, out.phi_d1, out.phi_d2, out.phi_d3);
  curvature_estimate(out);
  return out;
}

ViewDerivativeReport consistency_eq3_eq4(const ClosedContour& contour, const AngleTerms& terms,
                                         int xi, const Eigen::ArrayXd& kappa_paper, int guard) {
  require_uniform(contour, "consistency_eq3_eq4");
  const int n = contour.size();
  const double ds = contour.ds();
  xi = circular_index(xi, n);

  // View function v_xi(s): chord length from sample s to the fixed sample xi.
  Eigen::ArrayXd v(n);
  for (int s = 0; s < n; ++s) v[s] = s == xi ? 0.0 : terms.r_norm(s, xi);

  ViewDerivativeReport report;
  for (int s = 0; s < n; ++s) {
    const int sep = static_cast<int>(circular_distance(s, xi, n));
    if (sep <= guard) continue;
    const double vm = v[circular_index(s - 1, n)];
    const double vp = v[circular_index(s + 1, n)];
    const double fd1 = (vp - vm) / (2.0 * ds);
    const double fd2 = (vp - 2.0 * v[s] + vm) / (ds * ds);
    const double cw = terms.cos_omega(s, xi);
    const double sw = terms.sin_omega(s, xi);
    const double r = terms.r_norm(s, xi);
    report.max_abs_first = std::max(report.max_abs_first, std::abs(fd1 + sw));
    report.max_abs_second =
        std::max(report.max_abs_second, std::abs(fd2 - (kappa_paper[s] * cw + cw * cw / r)));
  }
  return report;
}

RateConsistencyReport consistency_adot(const DescriptorProfile& profile,
                                       const Eigen::ArrayXd& kappa_paper) {
  const int n = profile.n;
  const double ds = profile.ds;
  double num_a = 0.0, den_a = 0.0, num_b = 0.0, den_b = 0.0;
  for (int i = 0; i < n; ++i) {
    const int prev = circular_index(i - 1, n);
    const int next = circular_index(i + 1, n);
    const double a_dot = (profile.A[next] - profile.A[prev]) / (2.0 * ds);
    const double b_dot = (profile.B[next] - profile.B[prev]) / (2.0 * ds);
    const double rhs_a = -kappa_paper[i] * profile.phi_d1[i] + profile.C[i] / 3.0;
    const double rhs_b = 2.0 * kappa_paper[i] * profile.C[i] / 3.0 + profile.D[i];
    num_a += (a_dot - rhs_a) * (a_dot - rhs_a);
    den_a += a_dot * a_dot;
    num_b += (b_dot - rhs_b) * (b_dot - rhs_b);
    den_b += b_dot * b_dot;
  }
  RateConsistencyReport report;
  const double tiny = 1e-30;
  report.abs_rms_a = std::sqrt(num_a / n);
  report.abs_rms_b = std::sqrt(num_b / n);
  report.rel_rms_a = report.abs_rms_a / std::max(std::sqrt(den_a / n), tiny);
  report.rel_rms_b = report.abs_rms_b / std::max(std::sqrt(den_b / n), tiny);
  return report;
}

}  // namespace globvert
