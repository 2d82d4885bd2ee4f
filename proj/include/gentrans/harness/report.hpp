#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gentrans/harness/fit.hpp"

namespace gentrans {

/// printf("%.17g"), with inf/nan spelled out.
std::string fmt(double v);

struct CurveRow {
  double scale = 0.0;
  double value = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

struct Curve {
  std::string name;
  std::vector<CurveRow> rows;
  Verdict verdict = Verdict::inconclusive;
  double fitted_exponent = 0.0;
  double fit_residual = 0.0;
  double constant = 0.0;
};

struct RateReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> meta;  // resolved config and resolution
  std::vector<Curve> curves;
  Verdict verdict = Verdict::inconclusive;
  double fitted_exponent = 0.0;
  double fit_residual = 0.0;
  double measured_constant = 0.0;
  std::vector<std::string> notes;

  void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
};

/// Full report text: '#' metadata lines, one CSV block per curve followed by
/// its summary line, then the overall summary line.
std::string render_report(const RateReport& r);

/// Writes the report to `path` and `<path>.<curve>.dat` (scale value) per curve.
void write_report(const RateReport& r, const std::string& path);

}  // namespace gentrans
