#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gentrans/func.hpp"
#include "gentrans/jacobi.hpp"

namespace gentrans {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// The space L_{p,alpha,beta}: f (1-x)^alpha (1+x)^beta in L_p[-1,1].
/// p = infinity is encoded as kInfinity.
struct SpaceParams {
  double p = 2.0;
  double alpha = 0.0;
  double beta = 0.0;

  bool is_inf() const { return p == kInfinity; }
  /// 1/p, with 1/infinity = 0.
  double inv_p() const { return is_inf() ? 0.0 : 1.0 / p; }
  /// p >= 1 and the weight exponents keep bounded functions integrable.
  bool is_valid() const;
  std::string describe() const;
};

void require_valid(const SpaceParams& sp);

struct NormConfig {
  int nodes = 256;       // Gauss-Jacobi nodes for p < infinity
  int sup_grid = 4097;   // Chebyshev grid size for p = infinity
};

/// Distance kept from +-1 by every sampling grid.
inline constexpr double kEndpointGap = 1e-6;

/// ||.||_{p,alpha,beta} on a fixed discretisation. For p < infinity the
/// integral of |f|^p (1-x)^{alpha p} (1+x)^{beta p} is taken by Gauss-Jacobi
/// with exponents (alpha p, beta p); for p = infinity the weighted maximum is
/// taken over a Chebyshev-distributed grid kept kEndpointGap inside (-1,1).
class WeightedNorm {
 public:
  WeightedNorm(const SpaceParams& sp, NormConfig cfg = {});

  const SpaceParams& space() const { return sp_; }
  const NormConfig& config() const { return cfg_; }

  /// Points at which a function must be sampled.
  std::span<const double> nodes() const { return nodes_; }

  /// Norm of a function given by its samples at nodes().
  double operator()(std::span<const double> values) const;
  double operator()(const Func& f) const;
  double operator()(const Sampler& f) const;

 private:
  SpaceParams sp_;
  NormConfig cfg_;
  std::vector<double> nodes_;
  std::vector<double> weights_;  // quadrature weights, or sup weights (1-x)^a (1+x)^b
};

/// Chebyshev-extreme grid of n points in increasing order, clamped kEndpointGap inside.
std::vector<double> chebyshev_grid(int n);

double weighted_norm(const Func& f, const SpaceParams& sp, NormConfig cfg = {});

/// max{|alpha-beta|, alpha - 3/2 + 1/(2p), beta - 3/2 + 1/(2p)}.
double lambda0_for_theorems(const SpaceParams& sp);

/// Exponent shifts of the translation norm bound.
struct TranslationBoundParams {
  double gamma = 0.0;   // min{alpha, beta}
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
  double epsilon = 0.25;
};

/// Requires 0 < epsilon < 1/2.
TranslationBoundParams translation_bound_params(const SpaceParams& sp, double epsilon);

enum class Regime { lemma_E_D, thm_direct, thm_inverse, thm_equiv, thm_E_wD };

const char* regime_name(Regime r);

struct RegimeCheck {
  bool ok = true;
  std::string violation;  // first violated inequality, empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks the parameter ranges each regime requires.
RegimeCheck validate_regime(const SpaceParams& sp, const JacobiParams& jp, Regime regime);

}  // namespace gentrans
