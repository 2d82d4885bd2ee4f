#include "gentrans/best_approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "gentrans/errors.hpp"
#include "gentrans/quadrature.hpp"

namespace gentrans {

const char* method_name(ApproxMethod m) {
  switch (m) {
    case ApproxMethod::projection_p2: return "projection_p2";
    case ApproxMethod::exchange_pinf: return "exchange_pinf";
    case ApproxMethod::irls_general_p: return "irls_general_p";
    case ApproxMethod::jackson_asym: return "jackson_asym";
    case ApproxMethod::jackson_sym: return "jackson_sym";
  }
  return "?";
}

namespace {

int quad_nodes_for(int n, const ApproxOptions& opts) {
  return opts.quad_nodes > 0 ? std::max(opts.quad_nodes, n + 8) : std::max(256, 8 * n);
}

std::vector<double> sample(const Func& f, std::span<const double> xs) {
  std::vector<double> v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    v[i] = f(xs[i]);
    if (!std::isfinite(v[i])) {
      std::ostringstream msg;
      msg << "best_approx: non-finite sample of " << f.label << " at x=" << xs[i];
      throw SamplingError(msg.str());
    }
  }
  return v;
}

// Re-expresses a polynomial of degree < n in another basis. A rule of n + 8
// points integrates the degree 2n - 2 products exactly.
JacobiExpansion rebase(const std::function<double(double)>& poly, int n, const JacobiParams& basis) {
  return expand_in_jacobi(poly, n, basis, n + 8);
}

JacobiExpansion rebase(const JacobiExpansion& e, const JacobiParams& basis) {
  if (e.params() == basis) return e;
  return rebase([&e](double x) { return e(x); }, std::max(e.size(), 1), basis);
}

// Discrete orthogonal projection data for p = 2.
struct Projection {
  const QuadratureRule* rule = nullptr;
  std::vector<double> fx;
  std::vector<double> values;  // row-major nodes x n_max, P_k(x_i)
  std::vector<double> coeffs;  // in the (2alpha, 2beta) basis
  int n_max = 0;
};

Projection project_p2(const Func& f, int n_max, const SpaceParams& sp, const ApproxOptions& opts) {
  Projection pr;
  const double a = 2.0 * sp.alpha;
  const double b = 2.0 * sp.beta;
  pr.rule = &gauss_jacobi_rule(quad_nodes_for(n_max, opts), a, b);
  pr.n_max = n_max;
  pr.fx = sample(f, pr.rule->nodes);
  const std::size_t nodes = pr.rule->size();
  pr.values.resize(nodes * n_max);
  std::vector<double> num(n_max, 0.0), den(n_max, 0.0);
  for (std::size_t i = 0; i < nodes; ++i) {
    std::span<double> row(pr.values.data() + i * n_max, n_max);
    jacobi_values(a, b, pr.rule->nodes[i], row);
    const double w = pr.rule->weights[i];
    for (int k = 0; k < n_max; ++k) {
      num[k] += w * pr.fx[i] * row[k];
      den[k] += w * row[k] * row[k];
    }
  }
  pr.coeffs.resize(n_max);
  for (int k = 0; k < n_max; ++k) pr.coeffs[k] = num[k] / den[k];
  return pr;
}

double projection_error(const Projection& pr, int n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pr.rule->size(); ++i) {
    const double* row = pr.values.data() + i * pr.n_max;
    double p = 0.0;
    for (int k = 0; k < n; ++k) p += pr.coeffs[k] * row[k];
    const double r = pr.fx[i] - p;
    acc += pr.rule->weights[i] * r * r;
  }
  return std::sqrt(acc);
}

ApproxResult solve_p2(const Func& f, int n, const SpaceParams& sp, const ApproxOptions& opts) {
  const Projection pr = project_p2(f, n, sp, opts);
  ApproxResult res;
  res.degree_bound = n;
  res.method = ApproxMethod::projection_p2;
  res.error = projection_error(pr, n);
  res.poly = rebase(JacobiExpansion({2.0 * sp.alpha, 2.0 * sp.beta}, pr.coeffs), opts.basis);
  return res;
}

// Chebyshev T_0..T_{n-1} at x.
void chebyshev_values(double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() > 1) out[1] = x;
  for (std::size_t k = 2; k < out.size(); ++k) out[k] = 2.0 * x * out[k - 1] - out[k - 2];
}

double chebyshev_series(std::span<const double> a, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = a.size(); k-- > 1;) {
    const double b0 = a[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return a.empty() ? 0.0 : a[0] + x * b1 - b2;
}

std::vector<int> initial_reference(int n, int grid) {
  std::vector<int> ref(n + 1);
  for (int j = 0; j <= n; ++j) {
    ref[j] = static_cast<int>(std::lround(static_cast<double>(j) * (grid - 1) / n));
  }
  return ref;
}

// Alternating extrema: the largest |e| of every maximal sign run.
std::vector<int> alternating_extrema(const std::vector<double>& e, double floor) {
  std::vector<int> out;
  int sign = 0;
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    if (std::abs(e[i]) <= floor) continue;
    const int s = e[i] > 0 ? 1 : -1;
    if (s != sign) {
      out.push_back(i);
      sign = s;
    } else if (std::abs(e[i]) > std::abs(e[out.back()])) {
      out.back() = i;
    }
  }
  return out;
}

// Single-point exchange: bring in the global maximiser, keeping alternation.
std::vector<int> single_exchange(std::vector<int> ref, const std::vector<double>& e, int imax) {
  auto sgn = [&](int i) { return e[i] > 0 ? 1 : -1; };
  const int last = static_cast<int>(ref.size()) - 1;
  if (std::find(ref.begin(), ref.end(), imax) != ref.end()) return ref;
  if (imax < ref.front()) {
    if (sgn(imax) == sgn(ref.front())) {
      ref.front() = imax;
    } else {
      ref.insert(ref.begin(), imax);
      ref.pop_back();
    }
  } else if (imax > ref.back()) {
    if (sgn(imax) == sgn(ref.back())) {
      ref.back() = imax;
    } else {
      ref.push_back(imax);
      ref.erase(ref.begin());
    }
  } else {
    for (int j = 0; j < last; ++j) {
      if (ref[j] < imax && imax < ref[j + 1]) {
        if (sgn(imax) == sgn(ref[j])) {
          ref[j] = imax;
        } else {
          ref[j + 1] = imax;
        }
        break;
      }
    }
  }
  return ref;
}

ApproxResult solve_pinf(const Func& f, int n, const SpaceParams& sp, const ApproxOptions& opts) {
  if (opts.grid < n + 2) throw ParameterDomainError("best_approx: minimax grid smaller than n + 2");
  const std::vector<double> xs = chebyshev_grid(opts.grid);
  const std::vector<double> fx = sample(f, xs);
  const int G = opts.grid;
  std::vector<double> w(G);
  for (int i = 0; i < G; ++i) w[i] = std::pow(1.0 - xs[i], sp.alpha) * std::pow(1.0 + xs[i], sp.beta);
  double scale = 0.0;
  for (int i = 0; i < G; ++i) scale = std::max(scale, w[i] * std::abs(fx[i]));

  std::vector<int> ref = initial_reference(n, G);
  std::vector<double> a(n, 0.0), e(G), tk(n);
  Eigen::MatrixXd A(n + 1, n + 1);
  Eigen::VectorXd rhs(n + 1);
  double err = 0.0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    for (int j = 0; j <= n; ++j) {
      chebyshev_values(xs[ref[j]], tk);
      for (int k = 0; k < n; ++k) A(j, k) = tk[k];
      A(j, n) = (j % 2 == 0 ? 1.0 : -1.0) / w[ref[j]];
      rhs(j) = fx[ref[j]];
    }
    const Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
    for (int k = 0; k < n; ++k) a[k] = sol(k);
    const double h = std::abs(sol(n));

    int imax = 0;
    for (int i = 0; i < G; ++i) {
      e[i] = w[i] * (fx[i] - chebyshev_series(a, xs[i]));
      if (std::abs(e[i]) > std::abs(e[imax])) imax = i;
    }
    err = std::abs(e[imax]);

    auto finish = [&]() {
      ApproxResult res;
      res.degree_bound = n;
      res.method = ApproxMethod::exchange_pinf;
      res.error = err;
      res.iterations = it;
      res.poly = rebase([&a](double x) { return chebyshev_series(a, x); }, n, opts.basis);
      return res;
    };
    if (err <= 1e-14 * (1.0 + scale) || err - h <= opts.exchange_tol * err) return finish();

    std::vector<int> ext = alternating_extrema(e, 1e-15 * err);
    std::vector<int> next;
    if (static_cast<int>(ext.size()) >= n + 1) {
      std::size_t lo = 0, hi = ext.size() - 1;
      while (hi - lo + 1 > static_cast<std::size_t>(n + 1)) {
        if (std::abs(e[ext[lo]]) < std::abs(e[ext[hi]])) {
          ++lo;
        } else {
          --hi;
        }
      }
      next.assign(ext.begin() + lo, ext.begin() + hi + 1);
    } else {
      next = single_exchange(ref, e, imax);
    }
    if (next == ref) return finish();
    ref = std::move(next);
  }
  const JacobiExpansion last = rebase([&a](double x) { return chebyshev_series(a, x); }, n, opts.basis);
  throw IterationLimitError("best_approx: exchange did not converge for " + f.label,
                            std::vector<double>(last.coeffs().begin(), last.coeffs().end()), err);
}

ApproxResult solve_irls(const Func& f, int n, const SpaceParams& sp, const ApproxOptions& opts) {
  const double p = sp.p;
  const double a = sp.alpha * p;
  const double b = sp.beta * p;
  const QuadratureRule& rule = gauss_jacobi_rule(quad_nodes_for(n, opts), a, b);
  const std::vector<double> fx = sample(f, rule.nodes);
  const int N = static_cast<int>(rule.size());

  // Columns orthonormal in the discrete inner product.
  Eigen::MatrixXd phi(N, n);
  std::vector<double> row(n);
  for (int i = 0; i < N; ++i) {
    jacobi_values(a, b, rule.nodes[i], row);
    for (int k = 0; k < n; ++k) phi(i, k) = row[k];
  }
  Eigen::VectorXd norms(n);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += rule.weights[i] * phi(i, k) * phi(i, k);
    norms(k) = std::sqrt(s);
    phi.col(k) /= norms(k);
  }
  const Eigen::Map<const Eigen::VectorXd> fv(fx.data(), N);
  const Eigen::Map<const Eigen::VectorXd> wv(rule.weights.data(), N);

  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd s = Eigen::VectorXd::Ones(N);
  Eigen::VectorXd r = fv;
  auto error_of = [&](const Eigen::VectorXd& res) {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += wv(i) * std::pow(std::abs(res(i)), p);
    return std::pow(acc, 1.0 / p);
  };
  auto to_output = [&](const Eigen::VectorXd& cc) {
    std::vector<double> coeffs(n);
    for (int k = 0; k < n; ++k) coeffs[k] = cc(k) / norms(k);
    return rebase(JacobiExpansion({a, b}, std::move(coeffs)), opts.basis);
  };
  const double damping = p > 2.0 ? 1.0 / (p - 1.0) : 1.0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    const Eigen::VectorXd sq = (wv.array() * s.array()).sqrt().matrix();
    const Eigen::MatrixXd B = sq.asDiagonal() * phi;
    const Eigen::VectorXd ls = B.householderQr().solve(sq.cwiseProduct(fv));
    const Eigen::VectorXd next = it == 1 ? ls : Eigen::VectorXd(c + damping * (ls - c));
    const double change = (next - c).norm();
    c = next;
    r = fv - phi * c;
    if (it > 1 && change <= opts.irls_tol * (1.0 + c.norm())) {
      ApproxResult res;
      res.degree_bound = n;
      res.method = ApproxMethod::irls_general_p;
      res.error = error_of(r);
      res.iterations = it;
      res.poly = to_output(c);
      return res;
    }
    for (int i = 0; i < N; ++i) s(i) = std::pow(std::max(std::abs(r(i)), 1e-12), p - 2.0);
  }
  const JacobiExpansion last = to_output(c);
  throw IterationLimitError("best_approx: IRLS did not converge for " + f.label,
                            std::vector<double>(last.coeffs().begin(), last.coeffs().end()), error_of(r));
}

void check_request(int n, const SpaceParams& sp) {
  require_valid(sp);
  if (n < 1) throw ParameterDomainError("best_approx: n must be >= 1");
}

}  // namespace

ApproxResult best_approx(const Func& f, int n, const SpaceParams& sp, const ApproxOptions& opts) {
  check_request(n, sp);
  if (sp.is_inf()) return solve_pinf(f, n, sp, opts);
  if (sp.p == 2.0) return solve_p2(f, n, sp, opts);
  return solve_irls(f, n, sp, opts);
}

std::vector<double> best_approx_errors(const Func& f, std::span<const int> n_list, const SpaceParams& sp,
                                       const ApproxOptions& opts) {
  if (n_list.empty()) return {};
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    check_request(n_list[i], sp);
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw ParameterDomainError("best_approx_errors: n_list must increase");
  }
  std::vector<double> out;
  out.reserve(n_list.size());
  if (!sp.is_inf() && sp.p == 2.0) {
    const Projection pr = project_p2(f, n_list.back(), sp, opts);
    for (int n : n_list) out.push_back(projection_error(pr, n));
    return out;
  }
  ApproxOptions shared = opts;
  shared.quad_nodes = quad_nodes_for(n_list.back(), opts);
  for (int n : n_list) out.push_back(best_approx(f, n, sp, shared).error);
  return out;
}

std::vector<double> projection_residual_moments(const Func& f, const ApproxResult& r, const SpaceParams& sp,
                                                const ApproxOptions& opts) {
  require_valid(sp);
  if (sp.is_inf() || sp.p != 2.0) throw ParameterDomainError("projection_residual_moments: needs p = 2");
  const int n = r.degree_bound;
  const double a = 2.0 * sp.alpha;
  const double b = 2.0 * sp.beta;
  const QuadratureRule& rule = gauss_jacobi_rule(quad_nodes_for(n, opts), a, b);
  std::vector<double> num(n, 0.0), den(n, 0.0), row(n);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    const double res = f(x) - r.poly(x);
    jacobi_values(a, b, x, row);
    for (int k = 0; k < n; ++k) {
      num[k] += rule.weights[i] * res * row[k];
      den[k] += rule.weights[i] * row[k] * row[k];
    }
  }
  for (int k = 0; k < n; ++k) num[k] /= std::sqrt(den[k]);
  return num;
}

std::vector<JacobiExpansion> dyadic_blocks(const Func& f, int N, const SpaceParams& sp, const ApproxOptions& opts) {
  if (N < 0 || N > 10) throw ParameterDomainError("dyadic_blocks: need 0 <= N <= 10");
  const int top = 1 << N;
  std::vector<JacobiExpansion> blocks;
  JacobiExpansion prev;
  for (int k = 0; k <= N; ++k) {
    ApproxOptions o = opts;
    o.quad_nodes = quad_nodes_for(top, opts);
    JacobiExpansion cur = best_approx(f, 1 << k, sp, o).poly.truncated(top);
    blocks.push_back(k == 0 ? cur : cur - prev);
    prev = std::move(cur);
  }
  return blocks;
}

}  // namespace gentrans
