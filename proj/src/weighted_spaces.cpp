#include "gentrans/weighted_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gentrans/errors.hpp"
#include "gentrans/quadrature.hpp"

namespace gentrans {

bool SpaceParams::is_valid() const {
  if (std::isnan(p) || p < 1.0) return false;
  if (!std::isfinite(alpha) || !std::isfinite(beta)) return false;
  if (is_inf()) return alpha >= 0.0 && beta >= 0.0;
  return alpha > -1.0 / p && beta > -1.0 / p;
}

std::string SpaceParams::describe() const {
  std::ostringstream s;
  s << "p=" << (is_inf() ? std::string("inf") : std::to_string(p)) << " alpha=" << alpha
    << " beta=" << beta;
  return s.str();
}

void require_valid(const SpaceParams& sp) {
  if (!sp.is_valid()) {
    throw ParameterDomainError("invalid weighted space (" + sp.describe() +
                               "): need p >= 1 and alpha, beta > -1/p (>= 0 for p = inf)");
  }
}

std::vector<double> chebyshev_grid(int n) {
  std::vector<double> x(n);
  if (n == 1) {
    x[0] = 0.0;
    return x;
  }
  for (int k = 0; k < n; ++k) {
    const double v = -std::cos(k * std::numbers::pi / (n - 1));
    x[k] = std::clamp(v, -1.0 + kEndpointGap, 1.0 - kEndpointGap);
  }
  // cos rounding leaves a ~1e-17 residue at the centre.
  if (n % 2 == 1) x[n / 2] = 0.0;
  return x;
}

WeightedNorm::WeightedNorm(const SpaceParams& sp, NormConfig cfg) : sp_(sp), cfg_(cfg) {
  require_valid(sp_);
  if (sp_.is_inf()) {
    nodes_ = chebyshev_grid(cfg_.sup_grid);
    weights_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double x = nodes_[i];
      weights_[i] = std::pow(1.0 - x, sp_.alpha) * std::pow(1.0 + x, sp_.beta);
    }
  } else {
    const QuadratureRule& rule = gauss_jacobi_rule(cfg_.nodes, sp_.alpha * sp_.p, sp_.beta * sp_.p);
    nodes_ = rule.nodes;
    weights_ = rule.weights;
  }
}

double WeightedNorm::operator()(std::span<const double> values) const {
  if (values.size() != nodes_.size()) throw ParameterDomainError("WeightedNorm: sample count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      std::ostringstream msg;
      msg << "weighted_norm: non-finite sample at x=" << nodes_[i];
      throw SamplingError(msg.str());
    }
  }
  if (sp_.is_inf()) {
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) m = std::max(m, std::abs(values[i]) * weights_[i]);
    return m;
  }
  double acc = 0.0;
  if (sp_.p == 2.0) {
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights_[i] * values[i] * values[i];
    return std::sqrt(acc);
  }
  for (std::size_t i = 0; i < values.size(); ++i) acc += weights_[i] * std::pow(std::abs(values[i]), sp_.p);
  return std::pow(acc, 1.0 / sp_.p);
}

double WeightedNorm::operator()(const Sampler& f) const {
  std::vector<double> v(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) v[i] = f(nodes_[i]);
  return (*this)(v);
}

double WeightedNorm::operator()(const Func& f) const { return (*this)(f.sampler); }

double weighted_norm(const Func& f, const SpaceParams& sp, NormConfig cfg) {
  return WeightedNorm(sp, cfg)(f);
}

double lambda0_for_theorems(const SpaceParams& sp) {
  const double h = 0.5 * sp.inv_p();
  return std::max({std::abs(sp.alpha - sp.beta), sp.alpha - 1.5 + h, sp.beta - 1.5 + h});
}

TranslationBoundParams translation_bound_params(const SpaceParams& sp, double epsilon) {
  require_valid(sp);
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ParameterDomainError("translation_bound_params: epsilon must lie in (0, 1/2)");
  }
  TranslationBoundParams g;
  g.epsilon = epsilon;
  g.gamma = std::min(sp.alpha, sp.beta);
  g.gamma1 = sp.alpha > sp.beta ? sp.alpha - sp.beta : 0.0;
  g.gamma2 = sp.alpha > sp.beta ? 0.0 : sp.beta - sp.alpha;
  if (sp.p == 1.0) {
    g.gamma3 = g.gamma >= 1.0 ? g.gamma - 1.0 : 0.0;
  } else {
    const double edge = 1.5 - 0.5 * sp.inv_p();
    g.gamma3 = g.gamma >= edge ? g.gamma - edge + epsilon : 0.0;
  }
  return g;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::lemma_E_D: return "lemma_E_D";
    case Regime::thm_direct: return "thm_direct";
    case Regime::thm_inverse: return "thm_inverse";
    case Regime::thm_equiv: return "thm_equiv";
    case Regime::thm_E_wD: return "thm_E_wD";
  }
  return "?";
}

namespace {

constexpr double kTie = 1e-12;

bool same(double a, double b) { return std::abs(a - b) <= kTie; }

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

RegimeCheck fail(std::string why) { return {false, std::move(why)}; }

enum class Bound { open, closed };

// lo < v (open) or lo <= v (closed); likewise for hi.
RegimeCheck check_range(const char* name, double v, double lo, Bound lo_kind, double hi, Bound hi_kind) {
  const bool lo_ok = lo_kind == Bound::open ? v > lo : v >= lo;
  if (!lo_ok) {
    return fail(std::string(name) + (lo_kind == Bound::open ? " > " : " >= ") + fmt(lo) +
                " violated (" + name + "=" + fmt(v) + ")");
  }
  const bool hi_ok = hi_kind == Bound::open ? v < hi : v <= hi;
  if (!hi_ok) {
    return fail(std::string(name) + (hi_kind == Bound::open ? " < " : " <= ") + fmt(hi) +
                " violated (" + name + "=" + fmt(v) + ")");
  }
  return {};
}

// The per-p range shared by the Jackson-via-D estimate for nu = mu, mu = -1/2
// and nu > mu > -1/2, where `cap` is nu for the first two and mu for the last:
//   p = 1:       -1/2 < v <= cap
//   1 < p < inf: -1/(2p) < v < cap + 1/2 - 1/(2p)
//   p = inf:     0 <= v < cap + 1/2
RegimeCheck lemma_range(const char* name, double v, double cap, const SpaceParams& sp) {
  if (sp.p == 1.0) return check_range(name, v, -0.5, Bound::open, cap, Bound::closed);
  if (sp.is_inf()) return check_range(name, v, 0.0, Bound::closed, cap + 0.5, Bound::open);
  const double h = 0.5 / sp.p;
  return check_range(name, v, -h, Bound::open, cap + 0.5 - h, Bound::open);
}

// Derivative-characterisation ranges with clipped caps: 1/2 < v <= cap (p=1),
// 1 - 1/(2p) < v < cap + 1/2 - 1/(2p), 1 <= v < cap + 1/2 (p=inf).
RegimeCheck derivative_range(const char* name, double v, double cap, const SpaceParams& sp) {
  if (sp.p == 1.0) return check_range(name, v, 0.5, Bound::open, cap, Bound::closed);
  if (sp.is_inf()) return check_range(name, v, 1.0, Bound::closed, cap + 0.5, Bound::open);
  const double h = 0.5 / sp.p;
  return check_range(name, v, 1.0 - h, Bound::open, cap + 0.5 - h, Bound::open);
}

RegimeCheck check_lemma_E_D(const SpaceParams& sp, const JacobiParams& jp) {
  const double nu = jp.nu, mu = jp.mu;
  const double h = 0.5 * sp.inv_p();
  if (same(nu, -0.5) && same(mu, -0.5)) {
    if (!same(sp.alpha, -h) || !same(sp.beta, -h)) {
      return fail("nu=mu=-1/2 requires alpha=beta=-1/(2p)=" + fmt(-h));
    }
    return {};
  }
  if (same(nu, mu)) {
    if (!same(sp.alpha, sp.beta)) return fail("nu=mu>-1/2 requires alpha=beta");
    return lemma_range("alpha", sp.alpha, nu, sp);
  }
  if (same(mu, -0.5)) {
    if (!same(sp.beta, -h)) return fail("nu>mu=-1/2 requires beta=-1/(2p)=" + fmt(-h));
    return lemma_range("alpha", sp.alpha, nu, sp);
  }
  const double d = sp.alpha - sp.beta;
  if (!(nu - mu > d)) return fail("nu-mu > alpha-beta violated");
  if (!(d >= -kTie)) return fail("alpha-beta >= 0 violated");
  return lemma_range("beta", sp.beta, mu, sp);
}

RegimeCheck check_direct(const SpaceParams& sp) {
  for (auto [name, v] : {std::pair{"alpha", sp.alpha}, std::pair{"beta", sp.beta}}) {
    if (sp.p == 1.0) {
      if (!(v <= 2.0)) return fail(std::string(name) + " <= 2 violated (p=1)");
    } else {
      const double cap = 3.0 - sp.inv_p();
      if (!(v < cap)) return fail(std::string(name) + " < 3-1/p=" + fmt(cap) + " violated");
    }
  }
  return {};
}

RegimeCheck check_inverse(const SpaceParams& sp) {
  for (auto [name, v] : {std::pair{"alpha", sp.alpha}, std::pair{"beta", sp.beta}}) {
    if (sp.is_inf()) {
      if (!(v >= 1.0)) return fail(std::string(name) + " >= 1 violated (p=inf)");
    } else {
      const double lo = 1.0 - 0.5 / sp.p;
      if (!(v > lo)) return fail(std::string(name) + " > 1-1/(2p)=" + fmt(lo) + " violated");
    }
  }
  return {};
}

RegimeCheck check_E_wD(const SpaceParams& sp, const JacobiParams& jp) {
  const double cap = 2.5 - 0.5 * sp.inv_p();
  const double nu0 = std::min(jp.nu, cap);
  const double mu0 = std::min(jp.mu, cap);
  if (same(jp.nu, jp.mu)) {
    if (!(jp.nu > 0.5)) return fail("nu=mu requires nu > 1/2");
    if (!same(sp.alpha, sp.beta)) return fail("nu=mu>1/2 requires alpha=beta");
    return derivative_range("alpha", sp.alpha, nu0, sp);
  }
  if (jp.nu > jp.mu && jp.mu > 0.5) {
    const double d = sp.alpha - sp.beta;
    if (!(jp.nu - jp.mu > d)) return fail("nu-mu > alpha-beta violated");
    if (!(d >= -kTie)) return fail("alpha-beta >= 0 violated");
    return derivative_range("beta", sp.beta, mu0, sp);
  }
  return fail("requires nu=mu>1/2 or nu>mu>1/2");
}

}  // namespace

RegimeCheck validate_regime(const SpaceParams& sp, const JacobiParams& jp, Regime regime) {
  if (!sp.is_valid()) return fail("invalid space: " + sp.describe());
  if (regime == Regime::lemma_E_D || regime == Regime::thm_E_wD) {
    if (!jp.is_standing()) return fail("nu >= mu >= -1/2 violated");
  }
  switch (regime) {
    case Regime::lemma_E_D: return check_lemma_E_D(sp, jp);
    case Regime::thm_direct: return check_direct(sp);
    case Regime::thm_inverse: return check_inverse(sp);
    case Regime::thm_equiv: {
      // Equivalence: the two one-sided ranges together (1/2 < alpha <= 2 for p=1
      // is the p=1 reading of 1 - 1/(2p) < alpha and alpha <= 2).
      if (auto r = check_inverse(sp); !r) return r;
      return check_direct(sp);
    }
    case Regime::thm_E_wD: return check_E_wD(sp, jp);
  }
  return fail("unknown regime");
}

}  // namespace gentrans
