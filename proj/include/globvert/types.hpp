#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace globvert {

using Vec2 = Eigen::Vector2d;

/// One point per row, columns are x and y.
using Points = Eigen::Matrix<double, Eigen::Dynamic, 2>;

/// Error taxonomy mirrors the CLI exit codes: config -> 2, input -> 3, numeric -> 4.
enum class ErrorKind { config, input, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, const char* code, const std::string& detail) {
  throw Error(kind, code, detail);
}

inline int circular_index(int i, int n) {
  int m = i % n;
  return m < 0 ? m + n : m;
}

/// Shortest distance between positions a and b on a circular axis of length n.
inline double circular_distance(double a, double b, double n) {
  double d = std::abs(a - b);
  while (d > n) d -= n;
  return std::min(d, n - d);
}

inline Vec2 rotate90_ccw(const Vec2& v) { return Vec2(-v.y(), v.x()); }

}  // namespace globvert
