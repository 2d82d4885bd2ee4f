#pragma once

#include <span>
#include <vector>

#include "gentrans/expansion.hpp"
#include "gentrans/func.hpp"
#include "gentrans/translation.hpp"
#include "gentrans/weighted_spaces.hpp"

namespace gentrans {

enum class ApproxMethod { projection_p2, exchange_pinf, irls_general_p, jackson_asym, jackson_sym };

const char* method_name(ApproxMethod m);

struct ApproxOptions {
  JacobiParams basis{0.0, 0.0};  // basis of the returned polynomial
  int quad_nodes = 0;            // 0: max(256, 8n)
  int grid = 4097;               // discrete minimax grid for p = inf
  double exchange_tol = 1e-8;    // relative equioscillation defect
  int max_iter = 200;
  double irls_tol = 1e-9;        // coefficient change, relative to 1 + |c|
};

/// Best approximant among polynomials of degree <= degree_bound - 1.
struct ApproxResult {
  int degree_bound = 0;
  JacobiExpansion poly;
  double error = 0.0;
  ApproxMethod method = ApproxMethod::projection_p2;
  int iterations = 0;
  double tail_ratio = 0.0;  // Jackson constructs: relative energy beyond the degree bound
};

/// E_n(f)_{p,alpha,beta}: p = 2 by projection in the (2alpha, 2beta) Gauss-Jacobi
/// inner product, p = inf by a discrete weighted exchange on a Chebyshev grid,
/// other p by iteratively reweighted least squares.
ApproxResult best_approx(const Func& f, int n, const SpaceParams& sp, const ApproxOptions& opts = {});

/// E_n for every n in an increasing list on one shared discretisation (sized
/// for the largest n), so the sequence is monotone up to rounding.
std::vector<double> best_approx_errors(const Func& f, std::span<const int> n_list, const SpaceParams& sp,
                                       const ApproxOptions& opts = {});

/// Residual inner products <f - P, P_k>, k < n, in the (2alpha, 2beta) rule
/// used by the p = 2 solver. Certificate of optimality.
std::vector<double> projection_residual_moments(const Func& f, const ApproxResult& r, const SpaceParams& sp,
                                                const ApproxOptions& opts = {});

struct JacksonKernelSpec {
  int q = 1;
  int m = 1;

  void validate() const;
  /// (q+2)(m-1)
  int degree_bound() const { return (q + 2) * (m - 1); }
};

/// (sin(mt/2)/sin(t/2))^{2q}, equal to m^{2q} at t = 0.
double jackson_kernel(const JacksonKernelSpec& spec, double t);

struct JacksonConfig {
  TranslationConfig translation;
  NormConfig norm;
  int outer_nodes = 0;          // 0: max(4(q+2)m, 64)
  int extra_coeffs = 0;         // 0: max(16, bound + 1) coefficients checked past the bound
  double tail_tol = 1e-7;
  JacobiParams basis{0.0, 0.0};
};

/// Q(x) = int_0^pi T_t(f,x) K(t) sin^3 t dt / int_0^pi K(t) sin^3 t dt with
/// K = jackson_kernel({q+2, m}, .), a polynomial of degree (q+2)(m-1) in cos t.
/// The outer integral is Gauss-Jacobi in cos t. Throws DegreeViolationError when
/// the coefficient energy beyond (q+2)(m-1) exceeds tail_tol relative.
ApproxResult jackson_operator_asym(const Func& f, const JacksonKernelSpec& spec, const SpaceParams& sp,
                                   const JacksonConfig& cfg = {});

/// Symmetric construct with tau_t and angular weight sin^{2nu+1}(t/2) cos^{2mu+1}(t/2).
/// Requires the lemma_E_D regime and q > nu. degree_bound is n = (q+2)(m-1)+1.
ApproxResult jackson_operator_sym(const Func& f, const JacksonKernelSpec& spec, const JacobiParams& jp,
                                  const SpaceParams& sp, const JacksonConfig& cfg = {});

/// Smallest m with (n-1)/(q+2) < m, i.e. floor((n-1)/(q+2)) + 1.
int jackson_m_for_degree(int n, int q);

/// Q_0 = P_1, Q_k = P_{2^k} - P_{2^{k-1}} for best approximants P_j; k = 0..N.
std::vector<JacobiExpansion> dyadic_blocks(const Func& f, int N, const SpaceParams& sp,
                                           const ApproxOptions& opts = {});

}  // namespace gentrans
