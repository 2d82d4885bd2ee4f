#include "gentrans/jacobi.hpp"

#include <cmath>
#include <sstream>

#include "gentrans/errors.hpp"

namespace gentrans {

bool JacobiParams::is_standing() const {
  return std::isfinite(nu) && std::isfinite(mu) && nu >= mu && mu >= -0.5;
}

bool JacobiParams::is_basis() const {
  return std::isfinite(nu) && std::isfinite(mu) && nu > -1.0 && mu > -1.0;
}

void require_standing(const JacobiParams& jp) {
  if (!jp.is_standing()) {
    std::ostringstream msg;
    msg << "Jacobi parameters (nu=" << jp.nu << ", mu=" << jp.mu << ") violate nu >= mu >= -1/2";
    throw ParameterDomainError(msg.str());
  }
}

void require_basis(const JacobiParams& jp) {
  if (!jp.is_basis()) {
    std::ostringstream msg;
    msg << "Jacobi basis exponents (" << jp.nu << ", " << jp.mu << ") must both exceed -1";
    throw ParameterDomainError(msg.str());
  }
}

void jacobi_values(double a, double b, double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  // Standard P_1 = ((a+b+2)x + a - b)/2 with P_1(1) = a + 1.
  out[1] = ((a + b + 2.0) * x + a - b) / (2.0 * (a + 1.0));
  const double ab = a + b;
  for (std::size_t idx = 2; idx < out.size(); ++idx) {
    const double k = static_cast<double>(idx);
    const double s = 2.0 * k + ab;
    const double lead = 2.0 * k * (k + ab) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) / lead;
    const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s / lead;
    // Rescale from the standard recurrence: P_k(1) = P_{k-1}(1) (k+a)/k and
    // P_{k-2}(1) = P_{k-1}(1) (k-1)/(k-1+a).
    const double up = k / (k + a);
    out[idx] = up * (c1 * out[idx - 1] - c2 * (k - 1.0) / (k - 1.0 + a) * out[idx - 2]);
  }
}

double jacobi_eval(int n, const JacobiParams& jp, double x) {
  require_standing(jp);
  if (n < 0) throw ParameterDomainError("jacobi_eval: degree must be non-negative");
  if (n == 0) return 1.0;
  std::vector<double> vals(static_cast<std::size_t>(n) + 1);
  jacobi_values(jp.nu, jp.mu, x, vals);
  return vals.back();
}

double jacobi_eigenvalue(int n, const JacobiParams& jp) {
  return static_cast<double>(n) * (n + jp.nu + jp.mu + 1.0);
}

double jacobi_derivative_factor(int k, double a, double b) {
  return k * (k + a + b + 1.0) / (2.0 * (a + 1.0));
}

double jacobi_norm_sq(int k, double a, double b) {
  // Standard h_k = 2^{a+b+1}/(2k+a+b+1) G(k+a+1)G(k+b+1)/(G(k+a+b+1) k!),
  // divided by P_k(1)^2 = (G(k+a+1)/(G(a+1) k!))^2.
  if (k == 0) {
    return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                    std::lgamma(a + b + 2.0));
  }
  const double kk = k;
  const double log_std = (a + b + 1.0) * std::log(2.0) - std::log(2.0 * kk + a + b + 1.0) +
                         std::lgamma(kk + a + 1.0) + std::lgamma(kk + b + 1.0) -
                         std::lgamma(kk + a + b + 1.0) - std::lgamma(kk + 1.0);
  const double log_at_one = std::lgamma(kk + a + 1.0) - std::lgamma(a + 1.0) - std::lgamma(kk + 1.0);
  return std::exp(log_std - 2.0 * log_at_one);
}

}  // namespace gentrans

namespace gentrans {

double jacobi_series(double a, double b, std::span<const double> coeffs, double x) {
  const std::size_t n = coeffs.size();
  if (n == 0) return 0.0;
  double acc = coeffs[0];
  if (n == 1) return acc;
  double pm2 = 1.0;
  double pm1 = ((a + b + 2.0) * x + a - b) / (2.0 * (a + 1.0));
  acc += coeffs[1] * pm1;
  const double ab = a + b;
  const double a2b2 = a * a - b * b;
  for (std::size_t idx = 2; idx < n; ++idx) {
    const double k = static_cast<double>(idx);
    const double s = 2.0 * k + ab;
    const double lead = 2.0 * k * (k + ab) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a2b2) / lead;
    const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s / lead * (k - 1.0) / (k - 1.0 + a);
    const double p = k / (k + a) * (c1 * pm1 - c2 * pm2);
    acc += coeffs[idx] * p;
    pm2 = pm1;
    pm1 = p;
  }
  return acc;
}

}  // namespace gentrans
