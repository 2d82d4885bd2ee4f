#include "gentrans/harness/corpus.hpp"

#include <cmath>

#include "gentrans/errors.hpp"

namespace gentrans {

const std::vector<CorpusEntry>& corpus_catalogue() {
  static const std::vector<CorpusEntry> entries = {
      {"one", "the constant 1"},
      {"const:<c>", "the constant c"},
      {"x, x2, x3", "monomials x, x^2, x^3"},
      {"mono:<k>", "monomial x^k"},
      {"mode:<k>", "Jacobi polynomial P_k^{(nu,mu)}, normalised at 1"},
      {"abs_pow:<l>", "|x|^l (aliases abs_x = abs_pow:1, sqrt_abs_x = abs_pow:0.5)"},
      {"exp", "e^x"},
      {"tail:<s>", "sum_{k=1}^{255} k^{-s} P_k^{(nu,mu)} / sqrt(h_k)"},
      {"dtail:<r>:<s>", "tail whose D^r image is tail:<s>, i.e. coefficients divided by (k(k+nu+mu+1))^r"},
  };
  return entries;
}

std::vector<std::string> smooth_corpus() { return {"one", "x", "x2", "x3", "exp", "mode:3"}; }

namespace {

double number_after(const std::string& label, std::size_t colon) {
  const std::string text = label.substr(colon + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::logic_error&) {
    throw ConfigError("corpus label '" + label + "': bad parameter");
  }
  if (used != text.size() || !std::isfinite(v)) throw ConfigError("corpus label '" + label + "': bad parameter");
  return v;
}

int degree_after(const std::string& label, std::size_t colon) {
  const double v = number_after(label, colon);
  if (v < 0.0 || v > 1024.0 || v != std::floor(v)) {
    throw ConfigError("corpus label '" + label + "': degree must be an integer in [0, 1024]");
  }
  return static_cast<int>(v);
}

Func monomial(int k, const JacobiParams& basis, const std::string& label) {
  Sampler s = [k](double x) { return k == 0 ? 1.0 : std::pow(x, k); };
  Func f = Func::from_expansion(expand_in_jacobi(s, k + 1, basis, k + 9), label);
  f.sampler = s;
  f.d1 = [k](double x) { return k < 1 ? 0.0 : k * std::pow(x, k - 1); };
  f.d2 = [k](double x) { return k < 2 ? 0.0 : k * (k - 1) * std::pow(x, k - 2); };
  return f;
}

Func abs_power(double l, const std::string& label) {
  if (!(l > 0.0)) throw ConfigError("corpus label '" + label + "': exponent must be positive");
  Func f = Func::from_sampler([l](double x) { return std::pow(std::abs(x), l); }, label);
  f.d1 = [l](double x) { return x == 0.0 ? 0.0 : std::copysign(l * std::pow(std::abs(x), l - 1.0), x); };
  f.d2 = [l](double x) { return l * (l - 1.0) * std::pow(std::abs(x), l - 2.0); };
  return f;
}

}  // namespace

std::vector<double> tail_coefficients(double s, const JacobiParams& basis) {
  std::vector<double> c(kTailModes, 0.0);
  for (int k = 1; k < kTailModes; ++k) {
    c[k] = std::pow(static_cast<double>(k), -s) / std::sqrt(jacobi_norm_sq(k, basis.nu, basis.mu));
  }
  return c;
}

std::vector<double> derivative_tail_coefficients(int r, double s, const JacobiParams& basis) {
  std::vector<double> c = tail_coefficients(s, basis);
  for (int k = 1; k < kTailModes; ++k) c[k] /= std::pow(jacobi_eigenvalue(k, basis), r);
  return c;
}

Func make_corpus_function(const std::string& label, const JacobiParams& basis) {
  require_basis(basis);
  if (label == "one") {
    Func f = Func::constant(1.0);
    f.label = label;
    return f;
  }
  if (label == "x") return monomial(1, basis, label);
  if (label == "x2") return monomial(2, basis, label);
  if (label == "x3") return monomial(3, basis, label);
  if (label == "exp") {
    Func f = Func::from_sampler([](double x) { return std::exp(x); }, label);
    f.d1 = f.sampler;
    f.d2 = f.sampler;
    return f;
  }
  if (label == "abs_x") return abs_power(1.0, label);
  if (label == "sqrt_abs_x") return abs_power(0.5, label);

  const auto colon = label.find(':');
  if (colon != std::string::npos) {
    const std::string head = label.substr(0, colon);
    if (head == "const") {
      Func f = Func::constant(number_after(label, colon));
      f.label = label;
      return f;
    }
    if (head == "mono") return monomial(degree_after(label, colon), basis, label);
    if (head == "mode") {
      const int k = degree_after(label, colon);
      std::vector<double> c(k + 1, 0.0);
      c[k] = 1.0;
      return Func::from_expansion(JacobiExpansion(basis, std::move(c)), label);
    }
    if (head == "abs_pow") return abs_power(number_after(label, colon), label);
    if (head == "dtail") {
      const auto second = label.find(':', colon + 1);
      if (second == std::string::npos) throw ConfigError("corpus label '" + label + "': expected dtail:<r>:<s>");
      const int r = degree_after(label.substr(0, second), colon);
      const double s = number_after(label, second);
      return Func::from_expansion(JacobiExpansion(basis, derivative_tail_coefficients(r, s, basis)), label);
    }
    if (head == "tail") {
      return Func::from_expansion(JacobiExpansion(basis, tail_coefficients(number_after(label, colon), basis)),
                                  label);
    }
  }
  throw ConfigError("unknown corpus function '" + label + "' (try 'corpus list')");
}

}  // namespace gentrans
