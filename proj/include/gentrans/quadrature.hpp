#pragma once

#include <span>
#include <vector>

namespace gentrans {

enum class RuleKind { gauss_jacobi, gauss_chebyshev };

/// Nodes strictly inside (-1,1), increasing, with positive weights for the
/// weight (1-x)^a (1+x)^b. Exact for polynomials up to `exactness_degree`.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind = RuleKind::gauss_jacobi;
  double a = 0.0;
  double b = 0.0;
  int exactness_degree = 0;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }

  double total_mass() const;
};

/// n-point Gauss-Jacobi rule for (1-x)^a (1+x)^b, a, b > -1.
///
/// Nodes are eigenvalues of the Jacobi matrix polished by Newton steps on the
/// orthonormal recurrence; weights are Christoffel numbers 1/sum_k p_k(x)^2.
/// Rules are memoised; the returned reference stays valid for the program's
/// lifetime and may be shared between threads.
const QuadratureRule& gauss_jacobi_rule(int n_pts, double a, double b);

/// n-point Gauss-Chebyshev rule for 1/sqrt(1-x^2), closed form.
const QuadratureRule& gauss_chebyshev_rule(int n_pts);

/// 2^{a+b+1} G(a+1) G(b+1) / G(a+b+2): total mass of the Jacobi weight.
double jacobi_weight_mass(double a, double b);

}  // namespace gentrans
