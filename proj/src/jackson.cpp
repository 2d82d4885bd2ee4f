#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gentrans/best_approx.hpp"
#include "gentrans/errors.hpp"
#include "gentrans/quadrature.hpp"

namespace gentrans {

void JacksonKernelSpec::validate() const {
  if (q < 1 || m < 1) throw ParameterDomainError("Jackson kernel: need q >= 1 and m >= 1");
}

double jackson_kernel(const JacksonKernelSpec& spec, double t) {
  spec.validate();
  if (t < 0.0 || t > std::numbers::pi) throw ParameterDomainError("jackson_kernel: t must lie in [0, pi]");
  // sin(m s)/sin(s) = U_{m-1}(cos s), s = t/2; finite at s = 0.
  const double c = std::cos(0.5 * t);
  double u_prev = 1.0;
  double u = 2.0 * c;
  if (spec.m == 1) u = 1.0;
  for (int k = 2; k < spec.m; ++k) {
    const double next = 2.0 * c * u - u_prev;
    u_prev = u;
    u = next;
  }
  return std::pow(u * u, spec.q);
}

int jackson_m_for_degree(int n, int q) {
  if (n < 1 || q < 1) throw ParameterDomainError("jackson_m_for_degree: need n >= 1 and q >= 1");
  return (n - 1) / (q + 2) + 1;
}

namespace {

using Translate = std::function<void(double t, std::span<const double> xs, std::span<double> out)>;

// Shared pipeline: outer rule in y = cos t against `weight_a`, `weight_b`,
// projection onto `bound + 1 + extra` coefficients, tail check, truncation.
ApproxResult jackson_pipeline(const Func& f, const JacksonKernelSpec& spec, double weight_a, double weight_b,
                              int bound, const Translate& translate, const SpaceParams& sp,
                              const JacksonConfig& cfg, ApproxMethod method) {
  // Power 2(q+2): a polynomial of degree (q+2)(m-1) in cos t.
  const JacksonKernelSpec kernel{spec.q + 2, spec.m};
  const int outer = cfg.outer_nodes > 0 ? cfg.outer_nodes : std::max(4 * kernel.q * kernel.m, 64);
  const QuadratureRule& trule = gauss_jacobi_rule(outer, weight_a, weight_b);
  std::vector<double> ts(trule.size()), omega(trule.size());
  double mass = 0.0;
  for (std::size_t j = 0; j < trule.size(); ++j) {
    ts[j] = std::acos(trule.nodes[j]);
    omega[j] = trule.weights[j] * jackson_kernel(kernel, ts[j]);
    mass += omega[j];
  }
  for (double& o : omega) o /= mass;

  const int extra = cfg.extra_coeffs > 0 ? cfg.extra_coeffs : std::max(16, bound + 1);
  const int total = bound + 1 + extra;
  const JacobiParams& basis = cfg.basis;
  const QuadratureRule& xrule = gauss_jacobi_rule(total + 16, basis.nu, basis.mu);
  const std::size_t nx = xrule.size();

  std::vector<double> qx(nx, 0.0), tx(nx);
  for (std::size_t j = 0; j < ts.size(); ++j) {
    translate(ts[j], xrule.nodes, tx);
    for (std::size_t i = 0; i < nx; ++i) qx[i] += omega[j] * tx[i];
  }

  std::vector<double> num(total, 0.0), den(total, 0.0), row(total);
  double f_energy = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    jacobi_values(basis.nu, basis.mu, xrule.nodes[i], row);
    const double w = xrule.weights[i];
    const double fx = f(xrule.nodes[i]);
    f_energy += w * fx * fx;
    for (int k = 0; k < total; ++k) {
      num[k] += w * qx[i] * row[k];
      den[k] += w * row[k] * row[k];
    }
  }
  for (int k = 0; k < total; ++k) num[k] /= den[k];
  const JacobiExpansion full(basis, num);
  // Relative to f as well, so that a nearly annihilated f does not inflate the ratio.
  const double all = std::max(full.energy(), f_energy);
  const double tail = full.energy(bound + 1);

  ApproxResult res;
  res.method = method;
  res.degree_bound = bound + 1;
  res.tail_ratio = all > 0.0 ? tail / all : 0.0;
  res.iterations = outer;
  if (res.tail_ratio >= cfg.tail_tol) {
    std::ostringstream msg;
    msg << method_name(method) << " (q=" << spec.q << ", m=" << spec.m << ") on " << f.label
        << ": relative energy " << res.tail_ratio << " beyond degree " << bound;
    throw DegreeViolationError(msg.str());
  }
  res.poly = full.truncated(bound + 1);
  const JacobiExpansion poly = res.poly;
  res.error = weighted_norm(
      Func::from_sampler([&f, &poly](double x) { return f(x) - poly(x); }, "f-Q"), sp, cfg.norm);
  return res;
}

}  // namespace

ApproxResult jackson_operator_asym(const Func& f, const JacksonKernelSpec& spec, const SpaceParams& sp,
                                   const JacksonConfig& cfg) {
  spec.validate();
  require_valid(sp);
  cfg.translation.validate();
  // sin^3 t dt = (1 - y^2) dy for y = cos t.
  Translate tr = [&](double t, std::span<const double> xs, std::span<double> out) {
    asymmetric_translate(f, t, xs, out, cfg.translation);
  };
  return jackson_pipeline(f, spec, 1.0, 1.0, spec.degree_bound(), tr, sp, cfg, ApproxMethod::jackson_asym);
}

ApproxResult jackson_operator_sym(const Func& f, const JacksonKernelSpec& spec, const JacobiParams& jp,
                                  const SpaceParams& sp, const JacksonConfig& cfg) {
  spec.validate();
  require_standing(jp);
  cfg.translation.validate();
  if (const RegimeCheck rc = validate_regime(sp, jp, Regime::lemma_E_D); !rc) {
    throw ParameterDomainError("jackson_operator_sym: " + rc.violation);
  }
  if (!(spec.q > jp.nu)) throw ParameterDomainError("jackson_operator_sym: need q > nu");
  // sin^{2nu+1}(t/2) cos^{2mu+1}(t/2) dt is proportional to (1-y)^nu (1+y)^mu dy.
  Translate tr = [&](double t, std::span<const double> xs, std::span<double> out) {
    symmetric_translate(f, t, xs, out, jp, cfg.translation);
  };
  return jackson_pipeline(f, spec, jp.nu, jp.mu, spec.degree_bound(), tr, sp, cfg, ApproxMethod::jackson_sym);
}

}  // namespace gentrans
