#pragma once

#include "gentrans/harness/config.hpp"
#include "gentrans/harness/report.hpp"
#include "gentrans/smoothness.hpp"

namespace gentrans {

/// Bernstein and Markov type inequalities over the degrees in n_list. For p = 2 the maxima
/// over all polynomials come from generalized eigenproblems; otherwise random
/// polynomials (seeded) and the p = 2 extremals are tried.
RateReport verify_bernstein_markov(const ExperimentConfig& cfg);

/// E_n <= C M phi(1/n) where omega(f, delta) <= M phi(delta).
RateReport verify_direct_theorem(const ExperimentConfig& cfg);

/// omega(f, delta) <= C M phi(delta) where E_n <= M phi(1/n).
RateReport verify_inverse_theorem(const ExperimentConfig& cfg);

/// Fitted exponents of E_n (against 1/n) and omega (against delta) agree.
RateReport verify_equivalence(const ExperimentConfig& cfg);

/// Derivative characterisations with D^r computed spectrally; r = 0 is the
/// equivalence experiment.
RateReport verify_derivative_theorems(const ExperimentConfig& cfg);

/// Quadrature sizes used by the experiments, exposed so tests can reuse them.
ModulusConfig modulus_resolution(const Func& f, double delta_min, const SpaceParams& sp);
int approx_nodes(int n_max);

}  // namespace gentrans
