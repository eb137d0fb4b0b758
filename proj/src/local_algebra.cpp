#include <globvert/local_algebra.hpp>

#include <algorithm>
#include <cmath>

namespace globvert {

const char* to_string(LocalBehavior lb) {
  switch (lb) {
    case LocalBehavior::zuc: return "zuc";
    case LocalBehavior::zdc: return "zdc";
    case LocalBehavior::cz: return "cz";
    case LocalBehavior::nz: return "nz";
  }
  return "?";
}

LocalBehavior classify_window(std::span<const double> window, double eps) {
  if (window.empty()) fail(ErrorKind::config, "EmptyWindow", "cannot classify an empty window");
  if (eps <= 0.0) fail(ErrorKind::config, "BadTolerance", "eps must be positive");

  bool all_zero = true;
  bool any_zero = false;
  int transitions = 0;
  int first_sign = 0;
  int last_sign = 0;
  for (double v : window) {
    const int sign = std::abs(v) <= eps ? 0 : (v > 0.0 ? 1 : -1);
    if (sign == 0) {
      any_zero = true;
      continue;
    }
    all_zero = false;
    if (last_sign != 0 && sign != last_sign) ++transitions;
    if (first_sign == 0) first_sign = sign;
    last_sign = sign;
  }

  if (all_zero) return LocalBehavior::cz;
  if (transitions == 0) {
    // A graze (touches zero, never crosses) has order of contact >= 2.
    return any_zero ? LocalBehavior::cz : LocalBehavior::nz;
  }
  if (transitions == 1) return last_sign > 0 ? LocalBehavior::zuc : LocalBehavior::zdc;
  fail(ErrorKind::numeric, "AmbiguousWindow", "multiple sign changes; window too wide");
}

LocalBehavior classify(const Eigen::ArrayXd& signal, int index, double eps, int run) {
  const int n = static_cast<int>(signal.size());
  if (run < 0 || 2 * run + 1 > n) fail(ErrorKind::config, "BadWindow", "window does not fit the signal");
  std::vector<double> window(static_cast<size_t>(2 * run + 1));
  for (int k = -run; k <= run; ++k) {
    window[static_cast<size_t>(k + run)] = signal[circular_index(index + k, n)];
  }
  return classify_window(window, eps);
}

bool TableEntry::admits(LocalBehavior lb) const {
  if (main.matches(lb)) return true;
  return std::any_of(exceptions.begin(), exceptions.end(),
                     [lb](const TableOutcome& o) { return o.matches(lb); });
}

namespace {

TableOutcome exact(LocalBehavior lb) { return TableOutcome{false, lb}; }
TableOutcome generic_zc() { return TableOutcome{true, LocalBehavior::zuc}; }

bool is_zc(LocalBehavior lb) { return lb == LocalBehavior::zuc || lb == LocalBehavior::zdc; }

}  // namespace

TableEntry oplus_table(LocalBehavior f, LocalBehavior g) {
  // Symmetric; entries follow the composition of local behaviors under +.
  if (f == LocalBehavior::nz || g == LocalBehavior::nz) {
    if (f == LocalBehavior::nz && g == LocalBehavior::nz) {
      return TableEntry{exact(LocalBehavior::nz), {generic_zc(), exact(LocalBehavior::cz)}};
    }
    return TableEntry{exact(LocalBehavior::nz), {}};
  }
  if (f == LocalBehavior::cz) return TableEntry{exact(g), {}};
  if (g == LocalBehavior::cz) return TableEntry{exact(f), {}};
  if (f == g) return TableEntry{exact(f), {}};  // zuc+zuc or zdc+zdc
  // Opposite crossings: direction depends on the slopes, may cancel to cz.
  return TableEntry{generic_zc(), {exact(LocalBehavior::cz)}};
}

TableEntry otimes_table(LocalBehavior f, LocalBehavior g) {
  if (f == LocalBehavior::cz || g == LocalBehavior::cz) return TableEntry{exact(LocalBehavior::cz), {}};
  if (is_zc(f) && is_zc(g)) return TableEntry{exact(LocalBehavior::cz), {}};  // order of contact adds
  if (f == LocalBehavior::nz && g == LocalBehavior::nz) return TableEntry{exact(LocalBehavior::nz), {}};
  return TableEntry{generic_zc(), {}};  // zc times nz keeps the crossing
}

namespace {

LocalBehavior combine(LocalBehavior a, LocalBehavior b,
                      std::span<const double> f, std::span<const double> g, double eps,
                      bool multiply, const char* op_name) {
  if (f.size() != g.size() || f.empty()) {
    fail(ErrorKind::config, "BadWindow", std::string(op_name) + " needs aligned windows of equal length");
  }
  if (classify_window(f, eps) != a || classify_window(g, eps) != b) {
    fail(ErrorKind::config, "BehaviorMismatch",
         std::string(op_name) + ": declared behaviors do not match the germ windows");
  }
  std::vector<double> combined(f.size());
  for (size_t i = 0; i < f.size(); ++i) combined[i] = multiply ? f[i] * g[i] : f[i] + g[i];
  const double scale = multiply ? eps * eps : eps;
  return classify_window(combined, scale);
}

}  // namespace

LocalBehavior oplus(LocalBehavior a, LocalBehavior b,
                    std::span<const double> f, std::span<const double> g, double eps) {
  return combine(a, b, f, g, eps, false, "oplus");
}

LocalBehavior otimes(LocalBehavior a, LocalBehavior b,
                     std::span<const double> f, std::span<const double> g, double eps) {
  return combine(a, b, f, g, eps, true, "otimes");
}

double default_eps(const Eigen::ArrayXd& signal) {
  return 1e-6 * signal.abs().maxCoeff();
}

std::vector<ZeroCrossing> zero_crossings(const Eigen::ArrayXd& signal, double eps) {
  const int n = static_cast<int>(signal.size());
  if (n < 8) fail(ErrorKind::config, "NTooSmall", "zero crossing scan needs at least 8 samples");

  std::vector<int> cls(static_cast<size_t>(n));
  std::vector<int> strict;
  for (int i = 0; i < n; ++i) {
    const double v = signal[i];
    cls[static_cast<size_t>(i)] = std::abs(v) <= eps ? 0 : (v > 0.0 ? 1 : -1);
    if (cls[static_cast<size_t>(i)] != 0) strict.push_back(i);
  }
  if (strict.empty()) return {};  // constant zero: no localized crossing

  std::vector<ZeroCrossing> out;
  const int m = static_cast<int>(strict.size());
  for (int k = 0; k < m; ++k) {
    const int i1 = strict[static_cast<size_t>(k)];
    const int i2 = strict[static_cast<size_t>((k + 1) % m)];
    const int s1 = cls[static_cast<size_t>(i1)];
    const int s2 = cls[static_cast<size_t>(i2)];
    int gap = circular_index(i2 - i1, n);  // samples from i1 forward to i2
    if (gap == 0) gap = n;                 // single strict sample, run wraps fully

    if (gap == 1) {
      if (s1 != s2) {
        const double x1 = signal[i1];
        const double x2 = signal[i2];
        ZeroCrossing zc;
        zc.position = std::fmod(i1 + x1 / (x1 - x2), static_cast<double>(n));
        zc.upward = s2 > 0;
        zc.slope = std::abs(x2 - x1);
        zc.plateau = false;
        zc.from_sign = s1;
        zc.to_sign = s2;
        out.push_back(zc);
      }
      continue;
    }

    // A run of |signal| <= eps between two strict samples collapses to one
    // plateau record at the run center.
    ZeroCrossing zc;
    zc.position = std::fmod(i1 + 0.5 * gap, static_cast<double>(n));
    zc.upward = s2 > s1 || (s1 == s2 && s2 > 0);
    zc.slope = std::abs(signal[i2] - signal[i1]) / gap;
    zc.plateau = true;
    zc.run_length = gap - 1;
    zc.from_sign = s1;
    zc.to_sign = s2;
    out.push_back(zc);
  }

  std::sort(out.begin(), out.end(),
            [](const ZeroCrossing& a, const ZeroCrossing& b) { return a.position < b.position; });
  return out;
}

}  // namespace globvert
