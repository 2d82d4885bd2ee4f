#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gentrans/jacobi.hpp"

namespace gentrans {

/// f(x) ~ sum_k c_k P_k^{(nu,mu)}(x) with P_k(1) = 1, so f(1) = sum_k c_k.
class JacobiExpansion {
 public:
  JacobiExpansion() = default;
  JacobiExpansion(JacobiParams basis, std::vector<double> coeffs);

  const JacobiParams& params() const { return basis_; }
  std::span<const double> coeffs() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  /// Highest index with a non-zero coefficient; -1 for the zero expansion.
  int degree() const;

  double operator()(double x) const;

  /// Derivative, expressed in the (nu+1, mu+1) basis.
  JacobiExpansion derivative() const;

  /// Keeps the first n coefficients, zero-padding when n exceeds size().
  JacobiExpansion truncated(int n) const;

  /// sum_{k >= from} c_k^2 h_k where h_k is the weighted norm of P_k.
  double energy(int from = 0) const;

  friend JacobiExpansion operator+(const JacobiExpansion& lhs, const JacobiExpansion& rhs);
  friend JacobiExpansion operator-(const JacobiExpansion& lhs, const JacobiExpansion& rhs);
  friend JacobiExpansion operator*(double s, const JacobiExpansion& e);

 private:
  JacobiParams basis_;
  std::vector<double> coeffs_;
};

/// Default Gauss-Jacobi node count used for inner products: max(64, N + 16).
int default_projection_nodes(int n_coeffs);

/// Projects f onto P_0..P_{N-1} of `basis` with a Gauss-Jacobi rule of
/// `n_quad` points (0 selects the default). Throws SamplingError on a
/// non-finite sample.
JacobiExpansion expand_in_jacobi(const std::function<double(double)>& f, int n_coeffs,
                                 const JacobiParams& basis, int n_quad = 0);

}  // namespace gentrans
