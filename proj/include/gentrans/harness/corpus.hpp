#pragma once

#include <string>
#include <vector>

#include "gentrans/func.hpp"
#include "gentrans/jacobi.hpp"

namespace gentrans {

struct CorpusEntry {
  std::string pattern;
  std::string description;
};

const std::vector<CorpusEntry>& corpus_catalogue();

/// Builds a corpus function from its label. Polynomial and coefficient-designed
/// members carry an expansion in the `basis` (which must be a valid Jacobi
/// basis); elementary members carry analytic first and second derivatives.
Func make_corpus_function(const std::string& label, const JacobiParams& basis = {0.0, 0.0});

/// Number of modes in tail:<s> functions.
inline constexpr int kTailModes = 256;

/// Coefficients k^{-s} / sqrt(h_k) for k = 1..kTailModes-1 in the (a,b) basis.
std::vector<double> tail_coefficients(double s, const JacobiParams& basis);

/// tail_coefficients(s) divided by (k(k+nu+mu+1))^r, so D^r maps the result
/// onto tail:<s> up to sign.
std::vector<double> derivative_tail_coefficients(int r, double s, const JacobiParams& basis);

/// The smooth members used by identity/Jackson checks.
std::vector<std::string> smooth_corpus();

}  // namespace gentrans
