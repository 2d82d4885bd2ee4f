#include "gentrans/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gentrans/errors.hpp"

namespace gentrans {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void summary(std::ostringstream& out, Verdict v, double exponent, double residual, double constant) {
  out << "verdict,fitted_exponent,residual,constant\n"
      << verdict_name(v) << ',' << fmt(exponent) << ',' << fmt(residual) << ',' << fmt(constant) << '\n';
}

}  // namespace

std::string render_report(const RateReport& r) {
  std::ostringstream out;
  out << "# experiment: " << r.experiment << '\n';
  for (const auto& [k, v] : r.meta) out << "# " << k << ": " << v << '\n';
  for (const auto& n : r.notes) out << "# note: " << n << '\n';
  for (const auto& c : r.curves) {
    out << "# curve: " << c.name << '\n' << "scale,value,bound,ratio\n";
    for (const auto& row : c.rows) {
      out << fmt(row.scale) << ',' << fmt(row.value) << ',' << fmt(row.bound) << ',' << fmt(row.ratio) << '\n';
    }
    summary(out, c.verdict, c.fitted_exponent, c.fit_residual, c.constant);
  }
  out << "# summary\n";
  summary(out, r.verdict, r.fitted_exponent, r.fit_residual, r.measured_constant);
  return out.str();
}

void write_report(const RateReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write report '" + path + "'");
  out << render_report(r);
  for (const auto& c : r.curves) {
    std::string name = c.name;
    for (char& ch : name) {
      if (ch == ':' || ch == '/' || ch == ' ') ch = '_';
    }
    std::ofstream dat(path + "." + name + ".dat");
    if (!dat) throw ConfigError("cannot write curve data for '" + c.name + "'");
    dat << "# " << c.name << ": scale value\n";
    for (const auto& row : c.rows) dat << fmt(row.scale) << ' ' << fmt(row.value) << '\n';
  }
}

}  // namespace gentrans
