#include "gentrans/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gentrans/errors.hpp"
#include "gentrans/quadrature.hpp"

namespace gentrans {

JacobiExpansion::JacobiExpansion(JacobiParams basis, std::vector<double> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  require_basis(basis_);
}

int JacobiExpansion::degree() const {
  for (int k = size() - 1; k >= 0; --k) {
    if (coeffs_[k] != 0.0) return k;
  }
  return -1;
}

double JacobiExpansion::operator()(double x) const {
  return jacobi_series(basis_.nu, basis_.mu, coeffs_, x);
}

JacobiExpansion JacobiExpansion::derivative() const {
  std::vector<double> d(std::max<std::size_t>(coeffs_.size(), 2) - 1, 0.0);
  for (int k = 1; k < size(); ++k) {
    d[k - 1] = coeffs_[k] * jacobi_derivative_factor(k, basis_.nu, basis_.mu);
  }
  return {JacobiParams{basis_.nu + 1.0, basis_.mu + 1.0}, std::move(d)};
}

JacobiExpansion JacobiExpansion::truncated(int n) const {
  std::vector<double> c(static_cast<std::size_t>(std::max(n, 0)), 0.0);
  std::copy_n(coeffs_.begin(), std::min<std::size_t>(c.size(), coeffs_.size()), c.begin());
  return {basis_, std::move(c)};
}

double JacobiExpansion::energy(int from) const {
  double acc = 0.0;
  for (int k = std::max(from, 0); k < size(); ++k) {
    if (coeffs_[k] != 0.0) acc += coeffs_[k] * coeffs_[k] * jacobi_norm_sq(k, basis_.nu, basis_.mu);
  }
  return acc;
}

namespace {

void require_same_basis(const JacobiExpansion& lhs, const JacobiExpansion& rhs) {
  if (!(lhs.params() == rhs.params())) {
    std::ostringstream msg;
    msg << "expansions in different bases (" << lhs.params().nu << "," << lhs.params().mu << ") vs ("
        << rhs.params().nu << "," << rhs.params().mu << ")";
    throw BasisMismatchError(msg.str());
  }
}

}  // namespace

JacobiExpansion operator+(const JacobiExpansion& lhs, const JacobiExpansion& rhs) {
  require_same_basis(lhs, rhs);
  std::vector<double> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < lhs.coeffs_.size(); ++k) c[k] += lhs.coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
  return {lhs.basis_, std::move(c)};
}

JacobiExpansion operator-(const JacobiExpansion& lhs, const JacobiExpansion& rhs) {
  return lhs + (-1.0) * rhs;
}

JacobiExpansion operator*(double s, const JacobiExpansion& e) {
  std::vector<double> c = e.coeffs_;
  for (double& v : c) v *= s;
  return {e.basis_, std::move(c)};
}

int default_projection_nodes(int n_coeffs) { return std::max(64, n_coeffs + 16); }

JacobiExpansion expand_in_jacobi(const std::function<double(double)>& f, int n_coeffs,
                                 const JacobiParams& basis, int n_quad) {
  require_basis(basis);
  if (n_coeffs < 1) throw ParameterDomainError("expand_in_jacobi: need at least one coefficient");
  const int nodes = n_quad > 0 ? std::max(n_quad, n_coeffs + 8) : default_projection_nodes(n_coeffs);
  const QuadratureRule& rule = gauss_jacobi_rule(nodes, basis.nu, basis.mu);

  std::vector<double> num(n_coeffs, 0.0);
  std::vector<double> den(n_coeffs, 0.0);
  std::vector<double> p(n_coeffs);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg << "expand_in_jacobi: non-finite sample at x=" << x;
      throw SamplingError(msg.str());
    }
    jacobi_values(basis.nu, basis.mu, x, p);
    const double w = rule.weights[i];
    for (int k = 0; k < n_coeffs; ++k) {
      num[k] += w * fx * p[k];
      den[k] += w * p[k] * p[k];
    }
  }
  for (int k = 0; k < n_coeffs; ++k) num[k] /= den[k];
  return {basis, std::move(num)};
}

}  // namespace gentrans
