#include "gentrans/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <tuple>

#include "gentrans/errors.hpp"

namespace gentrans {

namespace {

// Recurrence x p_k = beta_{k+1} p_{k+1} + alpha_k p_k + beta_k p_{k-1} for the
// orthonormal Jacobi polynomials.
double jacobi_alpha(int k, double a, double b) {
  if (k == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * k + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double jacobi_beta(int k, double a, double b) {
  if (k == 1) {
    const double s = a + b + 2.0;
    return std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0)));
  }
  const double s = 2.0 * k + a + b;
  return std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0)));
}

QuadratureRule build_gauss_jacobi(int n, double a, double b) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = jacobi_alpha(k, a, b);
  for (int k = 1; k < n; ++k) sub(k - 1) = jacobi_beta(k, a, b);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd eig = solver.eigenvalues();

  const double mass = jacobi_weight_mass(a, b);
  const double p0 = 1.0 / std::sqrt(mass);

  QuadratureRule rule;
  rule.kind = RuleKind::gauss_jacobi;
  rule.a = a;
  rule.b = b;
  rule.exactness_degree = 2 * n - 1;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  std::vector<double> betas(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) betas[k] = jacobi_beta(k, a, b);

  for (int i = 0; i < n; ++i) {
    double x = eig(i);
    // Newton on p_n; the eigenvalue is already close so two or three steps suffice.
    for (int it = 0; it < 4; ++it) {
      double pm1 = 0.0, p = p0, dpm1 = 0.0, dp = 0.0;
      for (int k = 0; k < n; ++k) {
        const double pn = ((x - jacobi_alpha(k, a, b)) * p - betas[k] * pm1) / betas[k + 1];
        const double dpn = (p + (x - jacobi_alpha(k, a, b)) * dp - betas[k] * dpm1) / betas[k + 1];
        pm1 = p;
        p = pn;
        dpm1 = dp;
        dp = dpn;
      }
      const double step = p / dp;
      if (!std::isfinite(step)) break;
      const double nx = x - step;
      if (!(nx > -1.0 && nx < 1.0)) break;
      x = nx;
      if (std::abs(step) <= 4e-16 * std::max(1e-3, std::abs(x))) break;
    }
    double pm1 = 0.0, p = p0, sum = p0 * p0;
    for (int k = 0; k + 1 < n; ++k) {
      const double pn = ((x - jacobi_alpha(k, a, b)) * p - betas[k] * pm1) / betas[k + 1];
      pm1 = p;
      p = pn;
      sum += p * p;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

QuadratureRule build_gauss_chebyshev(int n) {
  QuadratureRule rule;
  rule.kind = RuleKind::gauss_chebyshev;
  rule.a = -0.5;
  rule.b = -0.5;
  rule.exactness_degree = 2 * n - 1;
  rule.nodes.resize(n);
  rule.weights.assign(n, std::numbers::pi / n);
  for (int i = 0; i < n; ++i) {
    // cos((2k-1) pi / 2n) for k = n..1, i.e. increasing order.
    const int k = n - i;
    rule.nodes[i] = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
  }
  return rule;
}

struct RuleCache {
  std::mutex mutex;
  std::map<std::tuple<int, int, double, double>, std::unique_ptr<QuadratureRule>> rules;
};

RuleCache& cache() {
  static RuleCache c;
  return c;
}

}  // namespace

double QuadratureRule::total_mass() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double jacobi_weight_mass(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

const QuadratureRule& gauss_jacobi_rule(int n_pts, double a, double b) {
  if (n_pts < 1) throw ParameterDomainError("gauss_jacobi_rule: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) {
    std::ostringstream msg;
    msg << "gauss_jacobi_rule: weight exponents (" << a << ", " << b << ") must exceed -1";
    throw ParameterDomainError(msg.str());
  }
  auto& c = cache();
  const auto key = std::make_tuple(0, n_pts, a, b);
  std::lock_guard lock(c.mutex);
  auto it = c.rules.find(key);
  if (it == c.rules.end()) {
    it = c.rules.emplace(key, std::make_unique<QuadratureRule>(build_gauss_jacobi(n_pts, a, b))).first;
  }
  return *it->second;
}

const QuadratureRule& gauss_chebyshev_rule(int n_pts) {
  if (n_pts < 1) throw ParameterDomainError("gauss_chebyshev_rule: need at least one node");
  auto& c = cache();
  const auto key = std::make_tuple(1, n_pts, -0.5, -0.5);
  std::lock_guard lock(c.mutex);
  auto it = c.rules.find(key);
  if (it == c.rules.end()) {
    it = c.rules.emplace(key, std::make_unique<QuadratureRule>(build_gauss_chebyshev(n_pts))).first;
  }
  return *it->second;
}

}  // namespace gentrans
