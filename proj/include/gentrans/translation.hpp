#pragma once

#include <span>

#include "gentrans/func.hpp"
#include "gentrans/jacobi.hpp"

namespace gentrans {

struct TranslationConfig {
  int inner_nodes = 96;   // single-integral rule size
  int outer_nodes = 48;   // radial rule size for the double-integral case

  void validate() const;
};

/// Asymmetric generalised translation T_t(f, x):
///
///   1/(pi (1-x^2)) int_{-1}^{1} [1 - R^2 - 2(1-z^2) sin^2 t
///                                + 4 (1-x^2)(1-z^2)^2 sin^2 t] f(R) dz/sqrt(1-z^2),
///   R = x cos t - z sqrt(1-x^2) sin t,
///
/// by Gauss-Chebyshev quadrature. T_t(1, x) = 1 and T_0 f = f.
double asymmetric_translate(const Func& f, double t, double x, const TranslationConfig& cfg = {});

/// T_t(f, x_i) for every x_i in `xs`.
void asymmetric_translate(const Func& f, double t, std::span<const double> xs, std::span<double> out,
                          const TranslationConfig& cfg = {});

/// Symmetric translation tau_t(f, x) for nu >= mu >= -1/2. Dispatches on
///   nu = mu = -1/2    (f(cos(theta - t)) + f(cos(theta + t)))/2, x = cos theta
///   nu = mu > -1/2    one integral against (1-z^2)^{nu-1/2}
///   nu > mu = -1/2    one integral against (1-z^2)^{nu-1/2}, radial argument
///   nu > mu > -1/2    double integral against (1-z^2)^{nu-mu-1} z^{2mu+1} (1-u^2)^{mu-1/2}
/// with argument x cos t + z u sqrt(1-x^2) sin t - (1-r^2)(1-x) sin^2(t/2),
/// r the radial variable. tau_t P_k(x) = P_k(x) P_k(cos t).
double symmetric_translate(const Func& f, double t, double x, const JacobiParams& jp,
                           const TranslationConfig& cfg = {});

void symmetric_translate(const Func& f, double t, std::span<const double> xs, std::span<double> out,
                         const JacobiParams& jp, const TranslationConfig& cfg = {});

/// int_{-1}^{1} (1-z^2)^{nu-1/2} dz, nu > -1/2.
double gamma_nu(double nu);
/// int_0^1 int_{-1}^{1} (1-z^2)^{nu-mu-1} z^{2mu+1} (1-u^2)^{mu-1/2} du dz, nu > mu > -1/2.
double gamma_nu_mu(double nu, double mu);

}  // namespace gentrans
