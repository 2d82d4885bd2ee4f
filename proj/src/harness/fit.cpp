#include "gentrans/harness/fit.hpp"

#include <algorithm>
#include <cmath>

#include "gentrans/errors.hpp"

namespace gentrans {

SlopeFit fit_log_slope(std::span<const double> scales, std::span<const double> values, double floor) {
  if (scales.size() != values.size()) throw ParameterDomainError("fit_log_slope: size mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (values[i] > floor && scales[i] > 0.0) {
      lx.push_back(std::log(scales[i]));
      ly.push_back(std::log(values[i]));
    }
  }
  SlopeFit fit;
  fit.used = static_cast<int>(lx.size());
  if (fit.used < 2) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= fit.used;
  my /= fit.used;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / fit.used);
  return fit;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 1;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

Stability measure_stability(std::span<const double> ratios, double floor) {
  Stability s;
  for (double r : ratios) {
    if (!(r > floor)) continue;
    if (s.all_zero) {
      s.min_ratio = s.max_ratio = r;
      s.all_zero = false;
    } else {
      s.min_ratio = std::min(s.min_ratio, r);
      s.max_ratio = std::max(s.max_ratio, r);
    }
  }
  s.variation = s.all_zero ? 1.0 : s.max_ratio / s.min_ratio;
  return s;
}

}  // namespace gentrans
