#include "gentrans/translation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "gentrans/errors.hpp"
#include "gentrans/quadrature.hpp"

namespace gentrans {

namespace {

constexpr double kTie = 1e-12;
// Rounding slack allowed on |R| <= 1 and |Q| <= 1 before it counts as a bug.
constexpr double kArgSlack = 1e-12;

void require_open(double x) {
  if (!(std::abs(x) < 1.0)) {
    std::ostringstream msg;
    msg << "translation point x=" << x << " is outside (-1,1)";
    throw DomainError(msg.str());
  }
}

double sample(const Func& f, double arg) {
  if (std::abs(arg) > 1.0 + kArgSlack) {
    std::ostringstream msg;
    msg << "translated argument " << arg << " left [-1,1]";
    throw std::logic_error(msg.str());
  }
  const double v = f(std::clamp(arg, -1.0, 1.0));
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "non-finite sample of " << f.label << " at " << arg;
    throw SamplingError(msg.str());
  }
  return v;
}

double asym_one(const Func& f, double t, double x, const QuadratureRule& rule) {
  require_open(x);
  const double s = std::sin(t);
  const double c = std::cos(t);
  const double y2 = (1.0 - x) * (1.0 + x);
  const double y = std::sqrt(y2);
  const double s2 = s * s;
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double z = rule.nodes[i];
    const double omz2 = (1.0 - z) * (1.0 + z);
    const double r = x * c - z * y * s;
    // 1 - R^2 - 2(1-z^2) s^2 rewritten with x^2 = 1 - y^2 so that every term
    // except s^2 (2z^2 - 1) carries a factor y.
    const double kernel = y2 - y2 * s2 + 2.0 * x * c * z * y * s - z * z * y2 * s2 +
                          s2 * (2.0 * z * z - 1.0) + 4.0 * y2 * omz2 * omz2 * s2;
    acc += rule.weights[i] * kernel * sample(f, r);
  }
  return acc / (std::numbers::pi * y2);
}

enum class SymCase { chebyshev, gegenbauer, radial, double_integral };

SymCase classify(const JacobiParams& jp) {
  require_standing(jp);
  const bool eq = std::abs(jp.nu - jp.mu) <= kTie;
  const bool mu_edge = std::abs(jp.mu + 0.5) <= kTie;
  if (eq && mu_edge) return SymCase::chebyshev;
  if (eq) return SymCase::gegenbauer;
  if (mu_edge) return SymCase::radial;
  return SymCase::double_integral;
}

// Q_{x,t,z,u} with the (1-r^2) factor taken on the radial variable r.
double q_arg(double x, double c, double ys, double half2, double zu, double r) {
  return x * c + zu * ys - (1.0 - r) * (1.0 + r) * (1.0 - x) * half2;
}

struct SymRules {
  const QuadratureRule* inner = nullptr;
  const QuadratureRule* radial = nullptr;  // s = 2z^2 - 1 on [-1,1], case 4 only
  std::vector<double> radial_z;
  double norm = 1.0;
};

SymRules sym_rules(SymCase kind, const JacobiParams& jp, const TranslationConfig& cfg) {
  SymRules r;
  switch (kind) {
    case SymCase::chebyshev: break;
    case SymCase::gegenbauer:
    case SymCase::radial:
      r.inner = &gauss_jacobi_rule(cfg.inner_nodes, jp.nu - 0.5, jp.nu - 0.5);
      r.norm = r.inner->total_mass();
      break;
    case SymCase::double_integral: {
      r.inner = &gauss_jacobi_rule(cfg.inner_nodes, jp.mu - 0.5, jp.mu - 0.5);
      // int_0^1 g(z) (1-z^2)^{nu-mu-1} z^{2mu+1} dz
      //   = 2^{-nu-1} int_{-1}^{1} g(sqrt((1+s)/2)) (1-s)^{nu-mu-1} (1+s)^mu ds
      r.radial = &gauss_jacobi_rule(cfg.outer_nodes, jp.nu - jp.mu - 1.0, jp.mu);
      r.radial_z.resize(r.radial->size());
      for (std::size_t j = 0; j < r.radial->size(); ++j) {
        r.radial_z[j] = std::sqrt(0.5 * (1.0 + r.radial->nodes[j]));
      }
      r.norm = r.inner->total_mass() * r.radial->total_mass();
      break;
    }
  }
  return r;
}

double sym_one(const Func& f, double t, double x, SymCase kind, const SymRules& rules) {
  require_open(x);
  const double c = std::cos(t);
  const double ys = std::sqrt((1.0 - x) * (1.0 + x)) * std::sin(t);
  const double sh = std::sin(0.5 * t);
  const double half2 = sh * sh;
  switch (kind) {
    case SymCase::chebyshev:
      return 0.5 * (sample(f, x * c + ys) + sample(f, x * c - ys));
    case SymCase::gegenbauer: {
      double acc = 0.0;
      for (std::size_t i = 0; i < rules.inner->size(); ++i) {
        const double z = rules.inner->nodes[i];
        acc += rules.inner->weights[i] * sample(f, q_arg(x, c, ys, half2, z, 1.0));
      }
      return acc / rules.norm;
    }
    case SymCase::radial: {
      double acc = 0.0;
      for (std::size_t i = 0; i < rules.inner->size(); ++i) {
        const double z = rules.inner->nodes[i];
        acc += rules.inner->weights[i] * sample(f, q_arg(x, c, ys, half2, z, z));
      }
      return acc / rules.norm;
    }
    case SymCase::double_integral: {
      double acc = 0.0;
      for (std::size_t j = 0; j < rules.radial->size(); ++j) {
        const double z = rules.radial_z[j];
        double inner = 0.0;
        for (std::size_t i = 0; i < rules.inner->size(); ++i) {
          const double u = rules.inner->nodes[i];
          inner += rules.inner->weights[i] * sample(f, q_arg(x, c, ys, half2, z * u, z));
        }
        acc += rules.radial->weights[j] * inner;
      }
      return acc / rules.norm;
    }
  }
  return 0.0;
}

}  // namespace

void TranslationConfig::validate() const {
  if (inner_nodes < 16 || outer_nodes < 16) {
    throw ParameterDomainError("TranslationConfig: inner_nodes and outer_nodes must be >= 16");
  }
}

double asymmetric_translate(const Func& f, double t, double x, const TranslationConfig& cfg) {
  cfg.validate();
  return asym_one(f, t, x, gauss_chebyshev_rule(cfg.inner_nodes));
}

void asymmetric_translate(const Func& f, double t, std::span<const double> xs, std::span<double> out,
                          const TranslationConfig& cfg) {
  cfg.validate();
  const QuadratureRule& rule = gauss_chebyshev_rule(cfg.inner_nodes);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = asym_one(f, t, xs[i], rule);
}

double symmetric_translate(const Func& f, double t, double x, const JacobiParams& jp,
                           const TranslationConfig& cfg) {
  cfg.validate();
  const SymCase kind = classify(jp);
  return sym_one(f, t, x, kind, sym_rules(kind, jp, cfg));
}

void symmetric_translate(const Func& f, double t, std::span<const double> xs, std::span<double> out,
                         const JacobiParams& jp, const TranslationConfig& cfg) {
  cfg.validate();
  const SymCase kind = classify(jp);
  const SymRules rules = sym_rules(kind, jp, cfg);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = sym_one(f, t, xs[i], kind, rules);
}

double gamma_nu(double nu) {
  if (!(nu > -0.5)) throw ParameterDomainError("gamma_nu: requires nu > -1/2");
  return gauss_jacobi_rule(8, nu - 0.5, nu - 0.5).total_mass();
}

double gamma_nu_mu(double nu, double mu) {
  if (!(nu > mu && mu > -0.5)) throw ParameterDomainError("gamma_nu_mu: requires nu > mu > -1/2");
  const double radial = std::pow(2.0, -nu - 1.0) * gauss_jacobi_rule(8, nu - mu - 1.0, mu).total_mass();
  return radial * gauss_jacobi_rule(8, mu - 0.5, mu - 0.5).total_mass();
}

}  // namespace gentrans
