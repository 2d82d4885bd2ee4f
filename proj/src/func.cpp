#include "gentrans/func.hpp"

#include <sstream>

namespace gentrans {

Func Func::from_sampler(Sampler s, std::string label) {
  Func f;
  f.sampler = std::move(s);
  f.label = std::move(label);
  return f;
}

Func Func::from_expansion(JacobiExpansion e, std::string label) {
  Func f;
  f.sampler = [e](double x) { return e(x); };
  f.expansion = std::move(e);
  f.label = std::move(label);
  return f;
}

Func Func::constant(double c) {
  std::ostringstream label;
  label << "const:" << c;
  Func f = Func::from_expansion(JacobiExpansion({0.0, 0.0}, {c}), label.str());
  f.d1 = [](double) { return 0.0; };
  f.d2 = [](double) { return 0.0; };
  return f;
}

Func scaled(const Func& f, double c) {
  Func out;
  out.sampler = [s = f.sampler, c](double x) { return c * s(x); };
  if (f.expansion) out.expansion = c * *f.expansion;
  if (f.d1) out.d1 = [d = f.d1, c](double x) { return c * d(x); };
  if (f.d2) out.d2 = [d = f.d2, c](double x) { return c * d(x); };
  std::ostringstream label;
  label << c << "*" << f.label;
  out.label = label.str();
  return out;
}

Func sum(const Func& f, const Func& g) {
  Func out;
  out.sampler = [a = f.sampler, b = g.sampler](double x) { return a(x) + b(x); };
  if (f.expansion && g.expansion && f.expansion->params() == g.expansion->params()) {
    out.expansion = *f.expansion + *g.expansion;
  }
  if (f.d1 && g.d1) out.d1 = [a = f.d1, b = g.d1](double x) { return a(x) + b(x); };
  if (f.d2 && g.d2) out.d2 = [a = f.d2, b = g.d2](double x) { return a(x) + b(x); };
  out.label = f.label + "+" + g.label;
  return out;
}

}  // namespace gentrans
