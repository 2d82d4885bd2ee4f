#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gentrans/expansion.hpp"

namespace gentrans {

using Sampler = std::function<double(double)>;

/// A real function on (-1,1): a re-entrant sampler, optionally backed by an
/// exact Jacobi expansion. Corpus functions may also carry analytic first and
/// second derivatives, used to apply D without finite differences.
struct Func {
  Sampler sampler;
  std::optional<JacobiExpansion> expansion;
  std::string label;
  Sampler d1;
  Sampler d2;

  double operator()(double x) const { return sampler(x); }

  bool has_derivatives() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }

  static Func from_sampler(Sampler s, std::string label);
  static Func from_expansion(JacobiExpansion e, std::string label);
  static Func constant(double c);
};

/// c f, preserving expansion and derivatives.
Func scaled(const Func& f, double c);
/// f + g; the expansion survives only when both share a basis.
Func sum(const Func& f, const Func& g);

inline JacobiExpansion expand_in_jacobi(const Func& f, int n_coeffs, const JacobiParams& basis,
                                        int n_quad = 0) {
  return expand_in_jacobi(Sampler(std::cref(f.sampler)), n_coeffs, basis, n_quad);
}

}  // namespace gentrans
