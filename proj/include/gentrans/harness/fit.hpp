#pragma once

#include <span>

namespace gentrans {

inline constexpr double kZeroFloor = 1e-13;

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of the log residuals
  int used = 0;           // points with value > floor
};

/// Least-squares slope of log(value) against log(scale), over values > floor.
SlopeFit fit_log_slope(std::span<const double> scales, std::span<const double> values,
                       double floor = kZeroFloor);

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);
int exit_code(Verdict v);
/// fail beats inconclusive beats pass.
Verdict combine(Verdict a, Verdict b);

struct Stability {
  bool all_zero = true;
  double min_ratio = 0.0;  // over ratios > floor
  double max_ratio = 0.0;
  double variation = 1.0;  // max / min
};

Stability measure_stability(std::span<const double> ratios, double floor = kZeroFloor);

}  // namespace gentrans
