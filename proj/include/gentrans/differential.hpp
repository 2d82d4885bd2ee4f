#pragma once

#include "gentrans/expansion.hpp"
#include "gentrans/func.hpp"
#include "gentrans/jacobi.hpp"

namespace gentrans {

/// D = (1-x^2) d^2/dx^2 + (mu - nu - (nu+mu+2) x) d/dx, iterated `order` times.
struct DOperator {
  JacobiParams params;
  int order = 1;

  void validate() const;
};

/// c_k -> (-k(k+nu+mu+1))^r c_k. The expansion must live in the (nu,mu)
/// basis of the operator.
JacobiExpansion apply_D_expansion(const JacobiExpansion& e, const DOperator& op);
JacobiExpansion apply_D_expansion(const JacobiExpansion& e, int r);

inline constexpr double kDefaultFdStep = 1e-4;

/// Central differences for f' and f'' combined into D f(x). With `richardson`
/// the h and h/2 results are extrapolated. Requires |x| + 2h < 1.
double apply_D_pointwise(const Func& f, const JacobiParams& jp, double x, double h = kDefaultFdStep,
                         bool richardson = false);

/// D f(x) from analytic first and second derivatives.
double apply_D_analytic(const Func& f, const JacobiParams& jp, double x);

/// D f(x) for an expansion evaluated through its derivative expansions
/// (independent of the diagonal coefficient map).
double apply_D_via_derivatives(const JacobiExpansion& e, double x);

/// D^r f as a Func: spectral when f carries a (nu,mu) expansion, analytic
/// from d1/d2 when r = 1, otherwise ParameterDomainError.
Func d_image(const Func& f, const DOperator& op);

}  // namespace gentrans
