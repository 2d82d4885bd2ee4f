#include "gentrans/differential.hpp"

#include <cmath>
#include <sstream>

#include "gentrans/errors.hpp"

namespace gentrans {

void DOperator::validate() const {
  require_standing(params);
  if (order < 1) throw ParameterDomainError("D: order must be >= 1");
}

JacobiExpansion apply_D_expansion(const JacobiExpansion& e, const DOperator& op) {
  op.validate();
  if (!(e.params() == op.params)) {
    std::ostringstream msg;
    msg << "D^(" << op.order << ") in basis (" << op.params.nu << "," << op.params.mu
        << ") applied to an expansion in (" << e.params().nu << "," << e.params().mu << ")";
    throw BasisMismatchError(msg.str());
  }
  std::vector<double> c(e.coeffs().begin(), e.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double lam = -jacobi_eigenvalue(static_cast<int>(k), op.params);
    c[k] *= std::pow(lam, op.order);
  }
  return {op.params, std::move(c)};
}

JacobiExpansion apply_D_expansion(const JacobiExpansion& e, int r) {
  return apply_D_expansion(e, DOperator{e.params(), r});
}

namespace {

double combine(const JacobiParams& jp, double x, double d1, double d2) {
  return (1.0 - x) * (1.0 + x) * d2 + (jp.mu - jp.nu - (jp.nu + jp.mu + 2.0) * x) * d1;
}

double central(const Func& f, const JacobiParams& jp, double x, double h) {
  const double fp = f(x + h);
  const double fm = f(x - h);
  const double f0 = f(x);
  return combine(jp, x, (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h));
}

}  // namespace

double apply_D_pointwise(const Func& f, const JacobiParams& jp, double x, double h, bool richardson) {
  require_standing(jp);
  if (!(h > 0.0)) throw ParameterDomainError("apply_D_pointwise: h must be positive");
  if (!(std::abs(x) + 2.0 * h < 1.0)) {
    std::ostringstream msg;
    msg << "apply_D_pointwise: stencil around x=" << x << " with h=" << h << " leaves (-1,1)";
    throw DomainError(msg.str());
  }
  const double coarse = central(f, jp, x, h);
  if (!richardson) return coarse;
  const double fine = central(f, jp, x, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

double apply_D_analytic(const Func& f, const JacobiParams& jp, double x) {
  require_standing(jp);
  if (!f.has_derivatives()) throw ParameterDomainError("apply_D_analytic: " + f.label + " has no derivatives");
  return combine(jp, x, f.d1(x), f.d2(x));
}

double apply_D_via_derivatives(const JacobiExpansion& e, double x) {
  const JacobiExpansion d1 = e.derivative();
  const JacobiExpansion d2 = d1.derivative();
  return combine(e.params(), x, d1(x), d2(x));
}

Func d_image(const Func& f, const DOperator& op) {
  op.validate();
  std::ostringstream label;
  label << "D^" << op.order << "(" << f.label << ")";
  if (f.expansion && f.expansion->params() == op.params) {
    return Func::from_expansion(apply_D_expansion(*f.expansion, op), label.str());
  }
  if (op.order == 1 && f.has_derivatives()) {
    return Func::from_sampler([f, jp = op.params](double x) { return apply_D_analytic(f, jp, x); },
                              label.str());
  }
  throw ParameterDomainError("d_image: " + f.label + " has neither a matching expansion nor derivatives");
}

}  // namespace gentrans
