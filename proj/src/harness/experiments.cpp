#include "gentrans/harness/experiments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gentrans/best_approx.hpp"
#include "gentrans/differential.hpp"
#include "gentrans/errors.hpp"
#include "gentrans/harness/corpus.hpp"
#include "gentrans/quadrature.hpp"

namespace gentrans {

ModulusConfig modulus_resolution(const Func& f, double delta_min, const SpaceParams& sp) {
  ModulusConfig mc;
  if (f.expansion) {
    const int deg = std::max(f.expansion->degree(), 0);
    mc.norm.nodes = std::max(256, deg + 16);
    mc.translation.inner_nodes = std::max(96, deg / 2 + 8);
  } else {
    mc.norm.nodes = std::max(256, static_cast<int>(std::ceil(16.0 * std::numbers::pi / delta_min)));
  }
  if (sp.is_inf()) mc.norm.sup_grid = 4097;
  return mc;
}

int approx_nodes(int n_max) { return std::max(256, 8 * n_max); }

namespace {

void require_regime(const ExperimentConfig& cfg, Regime regime) {
  const RegimeCheck rc = validate_regime(cfg.sp, cfg.jp, regime);
  if (!rc) throw ConfigError(std::string(regime_name(regime)) + " regime violated: " + rc.violation);
}

void require_corpus(const ExperimentConfig& cfg) {
  if (cfg.corpus.empty()) throw ConfigError("corpus is empty");
}

PhiFunction load_phi(const ExperimentConfig& cfg) { return parse_phi(cfg.phi); }

void add_config_meta(RateReport& rep, const ExperimentConfig& cfg) {
  for (const auto& line : cfg.describe()) {
    const auto eq = line.find('=');
    rep.add_meta("config " + line.substr(0, eq), line.substr(eq + 1));
  }
}

void add_phi_meta(RateReport& rep, const PhiFunction& phi, const ExperimentConfig& cfg) {
  const PhiShapeConstants shape = phi_shape_constants(phi);
  const double lambda0 = lambda0_for_theorems(cfg.sp);
  const PhiSumCheck s3 = phi_check_sum3(phi, lambda0, 64);
  const PhiSumCheck s4 = phi_check_sum4(phi, 64);
  rep.add_meta("phi C1", fmt(shape.c1));
  rep.add_meta("phi C2", fmt(shape.c2));
  rep.add_meta("phi lambda0", fmt(lambda0));
  rep.add_meta("phi C3", fmt(s3.constant) + (s3.bounded ? "" : " (unbounded)"));
  rep.add_meta("phi C4", fmt(s4.constant) + (s4.bounded ? "" : " (unbounded)"));
}

std::string resolution_text(const ModulusConfig& mc, int e_nodes, const SpaceParams& sp) {
  std::ostringstream s;
  s << "t_samples=" << mc.t_samples << " refine=" << mc.refine << " inner_nodes=" << mc.translation.inner_nodes;
  if (sp.is_inf()) {
    s << " sup_grid=" << mc.norm.sup_grid << " minimax_grid=4097";
  } else {
    s << " omega_nodes=" << mc.norm.nodes << " approx_nodes=" << e_nodes;
  }
  return s.str();
}

std::vector<double> approx_errors(const Func& f, const ExperimentConfig& cfg) {
  ApproxOptions opts;
  opts.quad_nodes = approx_nodes(cfg.n_list.back());
  return best_approx_errors(f, cfg.n_list, cfg.sp, opts);
}

std::vector<double> modulus_values(const Func& f, const ExperimentConfig& cfg, const ModulusConfig& mc) {
  return modulus_curve(f, cfg.delta_list, cfg.sp, mc).values;
}

// Curve of values against scales with bound = factor * g(scale).
Curve make_curve(std::string name, const std::vector<double>& scales, const std::vector<double>& values,
                 const std::vector<double>& bounds) {
  Curve c;
  c.name = std::move(name);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    CurveRow row{scales[i], values[i], bounds[i], 0.0};
    if (values[i] <= kZeroFloor) {
      row.ratio = 0.0;
    } else {
      row.ratio = bounds[i] > 0.0 ? values[i] / bounds[i] : kInfinity;
    }
    c.rows.push_back(row);
  }
  std::vector<double> v, r;
  for (const auto& row : c.rows) {
    v.push_back(row.value);
    r.push_back(row.ratio);
  }
  const SlopeFit fit = fit_log_slope(scales, v);
  c.fitted_exponent = fit.slope;
  c.fit_residual = fit.residual;
  c.constant = r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
  return c;
}

std::vector<double> ratios_of(const Curve& c) {
  std::vector<double> r;
  for (const auto& row : c.rows) r.push_back(row.ratio);
  return r;
}

// Stability verdict for a ratio curve. `zero_is_pass` decides all-zero curves.
Verdict stability_verdict(const Curve& c, const Tolerances& tol, bool zero_is_pass) {
  const std::vector<double> r = ratios_of(c);
  for (double v : r) {
    if (!std::isfinite(v)) return Verdict::fail;
  }
  const Stability s = measure_stability(r);
  if (s.all_zero) return zero_is_pass ? Verdict::pass : Verdict::inconclusive;
  return s.variation < tol.stability ? Verdict::pass : Verdict::fail;
}

std::vector<double> inverse_n(const std::vector<int>& ns) {
  std::vector<double> s;
  for (int n : ns) s.push_back(1.0 / n);
  return s;
}

void summarise(RateReport& rep, const std::vector<std::size_t>& checked) {
  rep.verdict = Verdict::pass;
  rep.measured_constant = 0.0;
  for (std::size_t i : checked) {
    rep.verdict = combine(rep.verdict, rep.curves[i].verdict);
    rep.measured_constant = std::max(rep.measured_constant, rep.curves[i].constant);
  }
  if (!checked.empty()) {
    rep.fitted_exponent = rep.curves[checked.front()].fitted_exponent;
    rep.fit_residual = rep.curves[checked.front()].fit_residual;
  }
}

std::vector<double> phi_at(const PhiFunction& phi, const std::vector<double>& scales, double factor) {
  std::vector<double> b;
  for (double s : scales) b.push_back(factor * phi(std::min(s, 1.0)));
  return b;
}

}  // namespace

RateReport verify_direct_theorem(const ExperimentConfig& cfg) {
  require_corpus(cfg);
  validate_lists(cfg);
  require_regime(cfg, Regime::thm_direct);
  const PhiFunction phi = load_phi(cfg);
  RateReport rep;
  rep.experiment = "direct";
  add_config_meta(rep, cfg);
  add_phi_meta(rep, phi, cfg);
  std::vector<std::size_t> checked;
  const std::vector<double> sn = inverse_n(cfg.n_list);
  for (const auto& label : cfg.corpus) {
    const Func f = make_corpus_function(label, cfg.jp);
    const ModulusConfig mc = modulus_resolution(f, cfg.delta_list.back(), cfg.sp);
    rep.add_meta("resolution " + label, resolution_text(mc, approx_nodes(cfg.n_list.back()), cfg.sp));
    Curve w = make_curve(label + ".omega", cfg.delta_list, modulus_values(f, cfg, mc), phi_at(phi, cfg.delta_list, 1.0));
    const double M = w.constant;
    w.verdict = Verdict::pass;
    rep.add_meta("M " + label, fmt(M));
    Curve e = make_curve(label + ".E_n", sn, approx_errors(f, cfg), phi_at(phi, sn, M));
    e.verdict = stability_verdict(e, cfg.tol, true);
    rep.curves.push_back(std::move(w));
    rep.curves.push_back(std::move(e));
    checked.push_back(rep.curves.size() - 1);
  }
  summarise(rep, checked);
  return rep;
}

RateReport verify_inverse_theorem(const ExperimentConfig& cfg) {
  require_corpus(cfg);
  validate_lists(cfg);
  require_regime(cfg, Regime::thm_inverse);
  const PhiFunction phi = load_phi(cfg);
  const double lambda0 = lambda0_for_theorems(cfg.sp);
  if (!phi_check_sum3(phi, lambda0, 64).bounded) throw ConfigError("phi fails the tail-sum condition sum_{j>n} j^{2 lambda0 - 1} phi(1/j) <= C n^{2 lambda0} phi(1/n)");
  if (!phi_check_sum4(phi, 64).bounded) throw ConfigError("phi fails the partial-sum condition sum_{j<=n} j phi(1/j) <= C n^2 phi(1/n)");
  RateReport rep;
  rep.experiment = "inverse";
  add_config_meta(rep, cfg);
  add_phi_meta(rep, phi, cfg);
  std::vector<std::size_t> checked;
  const std::vector<double> sn = inverse_n(cfg.n_list);
  for (const auto& label : cfg.corpus) {
    const Func f = make_corpus_function(label, cfg.jp);
    const ModulusConfig mc = modulus_resolution(f, cfg.delta_list.back(), cfg.sp);
    rep.add_meta("resolution " + label, resolution_text(mc, approx_nodes(cfg.n_list.back()), cfg.sp));
    Curve e = make_curve(label + ".E_n", sn, approx_errors(f, cfg), phi_at(phi, sn, 1.0));
    const double M = e.constant;
    e.verdict = Verdict::pass;
    rep.add_meta("M " + label, fmt(M));
    Curve w;
    if (M <= kZeroFloor) {
      // E_n vanishes on the whole list: the hypothesis carries no rate.
      std::vector<double> zeros(cfg.delta_list.size(), 0.0);
      w = make_curve(label + ".omega", cfg.delta_list, modulus_values(f, cfg, mc), zeros);
      for (auto& row : w.rows) row.ratio = 0.0;
      w.constant = 0.0;
      w.verdict = Verdict::inconclusive;
      rep.notes.push_back(label + ": E_n = 0 on n_list, degenerate M = 0");
    } else {
      w = make_curve(label + ".omega", cfg.delta_list, modulus_values(f, cfg, mc), phi_at(phi, cfg.delta_list, M));
      w.verdict = stability_verdict(w, cfg.tol, true);
    }
    rep.curves.push_back(std::move(e));
    rep.curves.push_back(std::move(w));
    checked.push_back(rep.curves.size() - 1);
  }
  summarise(rep, checked);
  return rep;
}

RateReport verify_equivalence(const ExperimentConfig& cfg) {
  require_corpus(cfg);
  validate_lists(cfg);
  require_regime(cfg, Regime::thm_equiv);
  const PhiFunction phi = load_phi(cfg);
  RateReport rep;
  rep.experiment = "equivalence";
  add_config_meta(rep, cfg);
  add_phi_meta(rep, phi, cfg);
  std::vector<std::size_t> checked;
  const std::vector<double> sn = inverse_n(cfg.n_list);
  for (const auto& label : cfg.corpus) {
    const Func f = make_corpus_function(label, cfg.jp);
    const ModulusConfig mc = modulus_resolution(f, cfg.delta_list.back(), cfg.sp);
    rep.add_meta("resolution " + label, resolution_text(mc, approx_nodes(cfg.n_list.back()), cfg.sp));
    Curve e = make_curve(label + ".E_n", sn, approx_errors(f, cfg), phi_at(phi, sn, 1.0));
    Curve w = make_curve(label + ".omega", cfg.delta_list, modulus_values(f, cfg, mc), phi_at(phi, cfg.delta_list, 1.0));
    const double gap = std::abs(e.fitted_exponent - w.fitted_exponent);
    rep.add_meta("slope_gap " + label, fmt(gap));
    const bool fits_ok = e.fit_residual < cfg.tol.residual && w.fit_residual < cfg.tol.residual;
    const bool degenerate = e.rows.empty() || e.constant == 0.0 || w.constant == 0.0;
    e.verdict = e.fit_residual < cfg.tol.residual ? Verdict::pass : Verdict::fail;
    if (degenerate) {
      w.verdict = Verdict::inconclusive;
    } else {
      w.verdict = (gap <= cfg.tol.slope && fits_ok) ? Verdict::pass : Verdict::fail;
    }
    rep.curves.push_back(std::move(e));
    rep.curves.push_back(std::move(w));
    checked.push_back(rep.curves.size() - 2);
    checked.push_back(rep.curves.size() - 1);
  }
  summarise(rep, checked);
  return rep;
}

namespace {

// sqrt(sum_{k >= n} c_k^2 h_k): exact E_n in L_{2,alpha,beta} when the
// expansion basis is (2 alpha, 2 beta).
double exact_tail_error(const JacobiExpansion& e, int n) { return std::sqrt(e.energy(n)); }

}  // namespace

RateReport verify_derivative_theorems(const ExperimentConfig& cfg) {
  if (cfg.r == 0) return verify_equivalence(cfg);
  require_corpus(cfg);
  validate_lists(cfg);
  require_regime(cfg, Regime::thm_E_wD);
  const PhiFunction phi = load_phi(cfg);
  RateReport rep;
  rep.experiment = "derivative";
  add_config_meta(rep, cfg);
  add_phi_meta(rep, phi, cfg);
  const bool exact_oracle = !cfg.sp.is_inf() && cfg.sp.p == 2.0 &&
                            cfg.jp == JacobiParams{2.0 * cfg.sp.alpha, 2.0 * cfg.sp.beta};
  std::vector<std::size_t> checked;
  const std::vector<double> sn = inverse_n(cfg.n_list);
  for (const auto& label : cfg.corpus) {
    const Func f = make_corpus_function(label, cfg.jp);
    if (!f.expansion) throw ConfigError("derivative experiment needs an expansion-backed corpus member, got " + label);
    const Func dr = d_image(f, DOperator{cfg.jp, cfg.r});
    const ModulusConfig mc = modulus_resolution(dr, cfg.delta_list.back(), cfg.sp);
    rep.add_meta("resolution " + label, resolution_text(mc, approx_nodes(cfg.n_list.back()), cfg.sp));

    Curve hyp = make_curve(label + ".E_n(D^r f)", sn, approx_errors(dr, cfg), phi_at(phi, sn, 1.0));
    hyp.verdict = stability_verdict(hyp, cfg.tol, true);

    std::vector<double> ef = approx_errors(f, cfg);
    if (exact_oracle) {
      double worst = 0.0;
      for (std::size_t i = 0; i < ef.size(); ++i) {
        const double exact = exact_tail_error(*f.expansion, cfg.n_list[i]);
        if (exact > 0.0) worst = std::max(worst, std::abs(ef[i] - exact) / exact);
      }
      rep.add_meta("tail_oracle_rel_dev " + label, fmt(worst));
    }
    std::vector<double> bound_a;
    for (int n : cfg.n_list) bound_a.push_back(std::pow(static_cast<double>(n), -2.0 * cfg.r) * phi(1.0 / n));
    Curve a = make_curve(label + ".E_n(f)", sn, ef, bound_a);
    a.verdict = stability_verdict(a, cfg.tol, true);

    Curve b = make_curve(label + ".omega(D^r f)", cfg.delta_list, modulus_values(dr, cfg, mc),
                         phi_at(phi, cfg.delta_list, 1.0));
    b.verdict = stability_verdict(b, cfg.tol, true);
    if (hyp.verdict != Verdict::pass) {
      rep.notes.push_back(label + ": hypothesis E_n(D^r f) <= C phi(1/n) not stable, checks are inconclusive");
      a.verdict = combine(a.verdict, Verdict::inconclusive);
      b.verdict = combine(b.verdict, Verdict::inconclusive);
    }
    rep.curves.push_back(std::move(hyp));
    rep.curves.push_back(std::move(a));
    rep.curves.push_back(std::move(b));
    checked.push_back(rep.curves.size() - 2);
    checked.push_back(rep.curves.size() - 1);
  }
  summarise(rep, checked);
  return rep;
}

namespace {

// Gram matrix int u_j u_k (1-x)^a (1+x)^b of u_k = P_k^{(ba, bb)} / sqrt(h_k)
// (or their derivatives), exact by Gauss-Jacobi.
Eigen::MatrixXd gram(int n, double a, double b, double ba, double bb, bool derivative) {
  const QuadratureRule& rule = gauss_jacobi_rule(n + 8, a, b);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> vals(n);
  Eigen::VectorXd u(n);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (derivative) {
      u(0) = 0.0;
      if (n > 1) {
        std::vector<double> d(n - 1);
        jacobi_values(ba + 1.0, bb + 1.0, rule.nodes[i], d);
        for (int k = 1; k < n; ++k) u(k) = jacobi_derivative_factor(k, ba, bb) * d[k - 1];
      }
    } else {
      jacobi_values(ba, bb, rule.nodes[i], vals);
      for (int k = 0; k < n; ++k) u(k) = vals[k];
    }
    for (int k = 0; k < n; ++k) u(k) /= std::sqrt(jacobi_norm_sq(k, ba, bb));
    g.noalias() += rule.weights[i] * u * u.transpose();
  }
  return g;
}

struct Extremal {
  double derivative_ratio = 0.0;  // ||P'||_{p,a+1/2,b+1/2} / (n ||P||_{p,a,b})
  double shift_ratio = 0.0;       // ||P||_{p,a,b} / (n^{2 max(rho,sigma)} ||P||_{p,a+rho,b+sigma})
  JacobiExpansion derivative_poly;
  JacobiExpansion shift_poly;
};

// Exact p = 2 maxima over polynomials of degree <= n-1 and their maximisers.
Extremal l2_extremals(int n, const SpaceParams& sp, double rho, double sigma) {
  Extremal out;
  const double a = 2.0 * sp.alpha, b = 2.0 * sp.beta;
  const double ra = a + 2.0 * rho, rb = b + 2.0 * sigma;
  const double power = std::pow(static_cast<double>(n), 2.0 * std::max(rho, sigma));

  const Eigen::MatrixXd gd = gram(n, a + 1.0, b + 1.0, a, b, true);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ed(gd);
  const Eigen::Index top_d = ed.eigenvalues().size() - 1;
  out.derivative_ratio = std::sqrt(std::max(ed.eigenvalues()(top_d), 0.0)) / n;
  std::vector<double> cd(n);
  for (int k = 0; k < n; ++k) cd[k] = ed.eigenvectors()(k, top_d) / std::sqrt(jacobi_norm_sq(k, a, b));
  out.derivative_poly = JacobiExpansion({a, b}, cd);

  const Eigen::MatrixXd gs = gram(n, a, b, ra, rb, false);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gs);
  const Eigen::Index top_s = es.eigenvalues().size() - 1;
  out.shift_ratio = std::sqrt(es.eigenvalues()(top_s)) / power;
  std::vector<double> cs(n);
  for (int k = 0; k < n; ++k) cs[k] = es.eigenvectors()(k, top_s) / std::sqrt(jacobi_norm_sq(k, ra, rb));
  out.shift_poly = JacobiExpansion({ra, rb}, cs);
  return out;
}

struct TrialRatios {
  double derivative = 0.0;
  double shift = 0.0;
};

TrialRatios ratios_for(const JacobiExpansion& poly, int n, const SpaceParams& sp, double rho, double sigma) {
  NormConfig nc;
  nc.nodes = std::max(256, 4 * n);
  const SpaceParams dsp{sp.p, sp.alpha + 0.5, sp.beta + 0.5};
  const SpaceParams ssp{sp.p, sp.alpha + rho, sp.beta + sigma};
  const JacobiExpansion d = poly.derivative();
  const double base = weighted_norm(Func::from_expansion(poly, "P"), sp, nc);
  TrialRatios r;
  if (base == 0.0) return r;
  r.derivative = weighted_norm(Func::from_expansion(d, "P'"), dsp, nc) / (n * base);
  const double shifted = weighted_norm(Func::from_expansion(poly, "P"), ssp, nc);
  r.shift = base / (std::pow(static_cast<double>(n), 2.0 * std::max(rho, sigma)) * shifted);
  return r;
}

}  // namespace

RateReport verify_bernstein_markov(const ExperimentConfig& cfg) {
  validate_lists(cfg);
  require_valid(cfg.sp);
  RateReport rep;
  rep.experiment = "bernstein";
  add_config_meta(rep, cfg);
  const bool exact = !cfg.sp.is_inf() && cfg.sp.p == 2.0;
  rep.add_meta("method", exact ? "generalized eigenproblem (exact maxima for p=2)"
                               : "max over seeded random trials, p=2 extremals and Chebyshev T_{n-1}");
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> scales, dvals, svals;
  for (int n : cfg.n_list) {
    Extremal ex = l2_extremals(n, {2.0, cfg.sp.alpha, cfg.sp.beta}, cfg.rho, cfg.sigma);
    double dr = ex.derivative_ratio, sr = ex.shift_ratio;
    if (!exact) {
      dr = 0.0;
      sr = 0.0;
      std::vector<JacobiExpansion> candidates{ex.derivative_poly, ex.shift_poly};
      std::vector<double> tn(n, 0.0);
      tn[n - 1] = 1.0;
      // T_{n-1} written in the Chebyshev-weight Jacobi basis is a single mode.
      candidates.emplace_back(JacobiParams{-0.5, -0.5}, tn);
      for (int t = 0; t < cfg.trials; ++t) {
        std::vector<double> c(n);
        for (int k = 0; k < n; ++k) c[k] = gauss(rng);
        candidates.emplace_back(JacobiParams{0.0, 0.0}, std::move(c));
      }
      for (const auto& poly : candidates) {
        const TrialRatios tr = ratios_for(poly, n, cfg.sp, cfg.rho, cfg.sigma);
        dr = std::max(dr, tr.derivative);
        sr = std::max(sr, tr.shift);
      }
    }
    scales.push_back(n);
    dvals.push_back(dr);
    svals.push_back(sr);
  }
  const std::vector<double> ones(scales.size(), 1.0);
  Curve d = make_curve("derivative", scales, dvals, ones);
  Curve s = make_curve("weight_shift", scales, svals, ones);
  d.verdict = stability_verdict(d, cfg.tol, true);
  s.verdict = stability_verdict(s, cfg.tol, true);
  rep.curves.push_back(std::move(d));
  rep.curves.push_back(std::move(s));
  summarise(rep, {0, 1});
  return rep;
}

}  // namespace gentrans
