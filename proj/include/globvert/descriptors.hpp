#pragma once

#include <Eigen/Core>

#include <globvert/contour.hpp>

namespace globvert {

/// Standard convention: a convex counterclockwise loop has positive curvature.
/// Paper convention: positive when the inward normal points away from the
/// center of curvature, so the same loop is negative. The two differ by a
/// single sign.
enum class SignConvention { standard, paper };

/// Pairwise chord geometry. Entry (i, j) describes the view from sample i
/// toward sample j: r_norm is the chord length, cos_omega projects the unit
/// chord onto the inward normal at i, sin_omega onto the tangent at i. The
/// diagonal is excluded (stored as zero).
struct AngleTerms {
  Eigen::MatrixXd cos_omega;
  Eigen::MatrixXd sin_omega;
  Eigen::MatrixXd r_norm;
};

struct DescriptorOptions {
  /// Subtract the constant contribution the chord kink at xi = s adds to the
  /// finite-differenced second derivative of the total-distance profile
  /// (d^2/ds^2 of the |s - xi| term integrates to 2). The smooth-integrand
  /// identity phi'' = kappa*A + B omits it; on a circle only the corrected
  /// estimator reproduces 1/R.
  bool self_chord_correction = true;
  SignConvention sign = SignConvention::standard;
  /// Samples with |A| <= a_threshold_scale * perimeter carry no estimate.
  double a_threshold_scale = 1e-3;
};

/// Per-sample global descriptors of a uniform closed contour.
///
/// phi is the total distance of each sample to the rest of the curve
/// (length^2); phi_d1/d2/d3 its circular finite differences; A, B, C, D the
/// chord-angle integrals; kappa_global the curvature estimate
/// (phi'' - B - correction) / A in the requested sign convention.
struct DescriptorProfile {
  int n = 0;
  double ds = 0.0;
  double perimeter = 0.0;
  Eigen::ArrayXd phi;
  Eigen::ArrayXd phi_d1;
  Eigen::ArrayXd phi_d2;
  Eigen::ArrayXd phi_d3;
  Eigen::ArrayXd A;
  Eigen::ArrayXd B;
  Eigen::ArrayXd C;
  Eigen::ArrayXd D;
  Eigen::ArrayXd kappa_global;              // NaN where undefined
  Eigen::Array<bool, Eigen::Dynamic, 1> kappa_defined;
  DescriptorOptions options;
};

AngleTerms angle_terms(const ClosedContour& contour, const FrameField& frames);

/// phi_i = sum_{j != i} |p_i - p_j| * ds (rectangle rule, self term zero).
Eigen::ArrayXd var_profile(const ClosedContour& contour, const AngleTerms& terms);

/// Circular central differences: 2-point for the first derivative, 3-point for
/// the second, the 5-point stencil (-1, 2, 0, -2, 1) / (2 ds^3) for the third.
void derivatives(const Eigen::ArrayXd& phi, double ds,
                 Eigen::ArrayXd& d1, Eigen::ArrayXd& d2, Eigen::ArrayXd& d3);

struct IntegralDescriptors {
  Eigen::ArrayXd A;  // sum cos(w) ds
  Eigen::ArrayXd B;  // sum cos^2(w)/r ds
  Eigen::ArrayXd C;  // 3 sum sin(w)cos(w)/r ds
  Eigen::ArrayXd D;  // 3 sum cos^2(w)sin(w)/r^2 ds
};

IntegralDescriptors integral_descriptors(const ClosedContour& contour, const AngleTerms& terms);

/// Fills kappa_global / kappa_defined from the profile's phi_d2, A, B.
void curvature_estimate(DescriptorProfile& profile);

/// Full pipeline: frames, chord integrals, derivatives, curvature estimate.
/// Streams the pairwise terms row by row (no N x N storage) with a fixed
/// per-row summation order, so results are identical across thread counts and
/// bit-equal to the AngleTerms-based operations.
DescriptorProfile compute_profile(const ClosedContour& contour,
                                  const DescriptorOptions& options = {});

/// Restricts a profile to every stride-th sample and recomputes derivatives and
/// the curvature estimate on the coarse grid. Used after noising: the inserted
/// points double the sample count but the original points stay at multiples of
/// the stride, so scenarios keep a shared indexing while the distance integrals
/// still run over the full noised boundary.
DescriptorProfile decimate_profile(const DescriptorProfile& profile, int stride);

struct ViewDerivativeReport {
  double max_abs_first = 0.0;   // | d/ds v_xi + sin(w) |
  double max_abs_second = 0.0;  // | d2/ds2 v_xi - (kappa cos(w) + cos^2(w)/r) |
};

/// Checks the view-function derivative identities against finite differences of
/// the chord length to sample xi, excluding a guard band around s = xi where
/// the chord kink makes the stencils meaningless. kappa_paper is the analytic
/// curvature in the paper convention.
ViewDerivativeReport consistency_eq3_eq4(const ClosedContour& contour, const AngleTerms& terms,
                                         int xi, const Eigen::ArrayXd& kappa_paper,
                                         int guard = 3);

struct RateConsistencyReport {
  double rel_rms_a = 0.0;  // FD(A) vs -kappa*phi_d1 + C/3
  double rel_rms_b = 0.0;  // FD(B) vs 2*kappa*C/3 + D
  double abs_rms_a = 0.0;  // absolute RMS residuals; meaningful when the FD
  double abs_rms_b = 0.0;  // side is itself near zero (constant A, B)
};

/// Checks the derivative identities of A and B on a smooth analytic contour,
/// reported as RMS residual relative to the RMS of the finite-differenced side.
RateConsistencyReport consistency_adot(const DescriptorProfile& profile,
                                       const Eigen::ArrayXd& kappa_paper);

}  // namespace globvert
