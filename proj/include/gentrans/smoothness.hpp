#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gentrans/func.hpp"
#include "gentrans/translation.hpp"
#include "gentrans/weighted_spaces.hpp"

namespace gentrans {

struct ModulusConfig {
  int t_samples = 16;   // grid points on [0, delta], endpoints included
  int refine = 3;       // subdivision factor around the grid argmax
  NormConfig norm;
  TranslationConfig translation;
};

/// Evaluates t -> ||T_t f - f||_{p,alpha,beta} with the samples of f cached.
class TranslationDefect {
 public:
  TranslationDefect(const Func& f, const SpaceParams& sp, const ModulusConfig& cfg);
  double operator()(double t) const;

 private:
  const Func& f_;
  ModulusConfig cfg_;
  WeightedNorm norm_;
  std::vector<double> f_samples_;
};

/// omega(f, delta) = sup_{|t| <= delta} ||T_t f - f||, approximated by a grid
/// maximum. T_t is even in t, so the grid covers [0, delta].
double modulus(const Func& f, double delta, const SpaceParams& sp, const ModulusConfig& cfg = {});

struct ModulusCurve {
  std::vector<double> deltas;
  std::vector<double> values;
  SpaceParams space;
};

/// omega at each delta. All t samples are pooled, so values are
/// non-decreasing in delta by construction.
ModulusCurve modulus_curve(const Func& f, std::span<const double> deltas, const SpaceParams& sp,
                           const ModulusConfig& cfg = {});

/// A function of modulus-of-continuity type, used on (0, 1].
struct PhiFunction {
  std::function<double(double)> eval;
  std::string label;
  double operator()(double t) const { return eval(t); }
};

PhiFunction phi_power(double lambda);
/// t^lambda (1 + log(1/t))^kappa.
PhiFunction phi_power_log(double lambda, double kappa);
/// "power:<lambda>" or "power_log:<lambda>:<kappa>"; throws ConfigError otherwise.
PhiFunction parse_phi(const std::string& label);

/// Measured C_{phi,1} (quasi-monotonicity) and C_{phi,2} (doubling) on a grid
/// of `grid_points` points of (0, 1].
struct PhiShapeConstants {
  double c1 = 0.0;
  double c2 = 0.0;
};
PhiShapeConstants phi_shape_constants(const PhiFunction& phi, int grid_points = 2000);

struct PhiSumCheck {
  double constant = 0.0;        // max ratio over n <= n_max
  std::vector<double> ratios;   // ratio for n = 1..n_max
  bool bounded = true;          // false when the series/partial sums grow without bound
  double decay_exponent = 0.0;  // local power of the summand at the far end
  double tail_bound = 0.0;      // monotone-tail estimate of the truncated remainder
};

inline constexpr long kPhiSeriesCap = 100000;

/// max_n [sum_{j>n} j^{2 lambda0 - 1} phi(1/j)] / [n^{2 lambda0} phi(1/n)],
/// series truncated at n_cap plus a monotone tail estimate.
PhiSumCheck phi_check_sum3(const PhiFunction& phi, double lambda0, int n_max, long n_cap = kPhiSeriesCap);

/// max_n [sum_{j<=n} j phi(1/j)] / [n^2 phi(1/n)].
PhiSumCheck phi_check_sum4(const PhiFunction& phi, int n_max);

}  // namespace gentrans
