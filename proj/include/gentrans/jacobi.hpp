#pragma once

#include <span>
#include <vector>

namespace gentrans {

/// Exponents (nu, mu) of the Jacobi weight (1-x)^nu (1+x)^mu.
///
/// The translation and differential machinery needs nu >= mu >= -1/2
/// (`is_standing`). Expansions and quadrature only need a basis that is
/// orthogonal, i.e. both exponents > -1 (`is_basis`).
struct JacobiParams {
  double nu = 0.0;
  double mu = 0.0;

  bool is_standing() const;
  bool is_basis() const;
  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// Throws ParameterDomainError unless nu >= mu >= -1/2.
void require_standing(const JacobiParams& jp);
/// Throws ParameterDomainError unless nu > -1 and mu > -1.
void require_basis(const JacobiParams& jp);

/// P_n^{(nu,mu)}(x) normalised so that P_n(1) = 1. Requires standing params.
double jacobi_eval(int n, const JacobiParams& jp, double x);

/// n(n + nu + mu + 1): minus the eigenvalue of D on P_n^{(nu,mu)}.
double jacobi_eigenvalue(int n, const JacobiParams& jp);

/// Writes P_0(x) .. P_{out.size()-1}(x), normalised at 1, for any basis
/// exponents a, b > -1. Standard three-term recurrence, each term divided by
/// its value at x = 1.
void jacobi_values(double a, double b, double x, std::span<double> out);

/// d/dx of the normalised P_k^{(a,b)} equals this factor times the
/// normalised P_{k-1}^{(a+1,b+1)}.
double jacobi_derivative_factor(int k, double a, double b);

/// Integral of P_k^{(a,b)}(x)^2 (1-x)^a (1+x)^b over [-1,1] for the
/// normalised polynomial, in closed form.
double jacobi_norm_sq(int k, double a, double b);

}  // namespace gentrans

namespace gentrans {

/// sum_k coeffs[k] P_k^{(a,b)}(x) with P_k normalised at 1, accumulated along
/// the recurrence without allocating.
double jacobi_series(double a, double b, std::span<const double> coeffs, double x);

}  // namespace gentrans
