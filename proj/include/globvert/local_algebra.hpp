#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include <globvert/types.hpp>

namespace globvert {

/// Local behavior of a signal around a sample: zero up-crossing, zero
/// down-crossing, constant zero (order of contact >= 2), or bounded away from
/// zero. Mutually exclusive and collectively exhaustive for any window.
enum class LocalBehavior { zuc, zdc, cz, nz };

const char* to_string(LocalBehavior lb);

/// Classifies a window of samples against a magnitude tolerance eps:
///   - cz when every sample is within eps of zero, or the window grazes zero
///     without a sign change (an extremum touching the axis);
///   - zuc / zdc when the strictly signed samples make exactly one transition;
///   - nz when no sample comes within eps of zero.
/// Multiple transitions raise AmbiguousWindow: the window is too wide to call
/// the behavior local.
LocalBehavior classify_window(std::span<const double> window, double eps);

/// classify_window on the circular window of 2*run + 1 samples centered at index.
LocalBehavior classify(const Eigen::ArrayXd& signal, int index, double eps, int run);

/// One cell of the composition tables. `main` is the generic outcome; a
/// parenthesized exception list holds the special cases that depend on slopes
/// and values. generic_zc entries match either crossing direction.
struct TableOutcome {
  bool generic_zc = false;
  LocalBehavior behavior = LocalBehavior::nz;

  bool matches(LocalBehavior lb) const {
    if (generic_zc) return lb == LocalBehavior::zuc || lb == LocalBehavior::zdc;
    return lb == behavior;
  }
};

struct TableEntry {
  TableOutcome main;
  std::vector<TableOutcome> exceptions;

  bool unambiguous() const { return exceptions.empty(); }
  bool admits(LocalBehavior lb) const;
};

TableEntry oplus_table(LocalBehavior f, LocalBehavior g);
TableEntry otimes_table(LocalBehavior f, LocalBehavior g);

/// Behavior of f + g from aligned germ windows. a and b must match the direct
/// classification of the individual windows; the result is the direct
/// classification of the sum, which resolves the table's exception cells.
LocalBehavior oplus(LocalBehavior a, LocalBehavior b,
                    std::span<const double> f, std::span<const double> g, double eps);

/// Behavior of f * g, analogous to oplus.
LocalBehavior otimes(LocalBehavior a, LocalBehavior b,
                     std::span<const double> f, std::span<const double> g, double eps);

/// A zero crossing of a circular signal. For strict crossings the signal has
/// opposite strict signs at floor(position) and ceil(position) and the
/// fractional part comes from linear interpolation. Runs of samples within eps
/// collapse to a single plateau record at the run center.
struct ZeroCrossing {
  double position = 0.0;
  bool upward = false;
  double slope = 0.0;    // signal units per sample across the crossing
  bool plateau = false;  // collapsed |signal| <= eps run
  int run_length = 0;    // samples within eps for plateau records
  int from_sign = 0;     // strict sign before / after; equal signs mean a graze
  int to_sign = 0;

  bool through_zero() const { return from_sign != 0 && to_sign != 0 && from_sign != to_sign; }
};

/// Suggested tolerance: 1e-6 * max|signal|.
double default_eps(const Eigen::ArrayXd& signal);

/// All zero crossings of a circular signal. A signal entirely within eps has
/// no localized crossing and yields an empty list.
std::vector<ZeroCrossing> zero_crossings(const Eigen::ArrayXd& signal, double eps);

}  // namespace globvert
