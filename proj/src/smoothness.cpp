#include "gentrans/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gentrans/errors.hpp"

namespace gentrans {

TranslationDefect::TranslationDefect(const Func& f, const SpaceParams& sp, const ModulusConfig& cfg)
    : f_(f), cfg_(cfg), norm_(sp, cfg.norm) {
  const auto xs = norm_.nodes();
  f_samples_.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) f_samples_[i] = f_(xs[i]);
}

double TranslationDefect::operator()(double t) const {
  const auto xs = norm_.nodes();
  std::vector<double> diff(xs.size());
  asymmetric_translate(f_, t, xs, diff, cfg_.translation);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= f_samples_[i];
  return norm_(diff);
}

namespace {

void check_modulus_args(double delta, const ModulusConfig& cfg) {
  if (!(delta > 0.0 && delta <= std::numbers::pi)) {
    throw ParameterDomainError("modulus: delta must lie in (0, pi]");
  }
  if (cfg.t_samples < 8) throw ParameterDomainError("modulus: t_samples must be >= 8");
  if (cfg.refine < 1) throw ParameterDomainError("modulus: refine must be >= 1");
}

struct Sample {
  double t;
  double value;
};

// Grid on [0, delta] plus a refined patch around the argmax; samples appended.
void sample_window(const TranslationDefect& defect, double delta, const ModulusConfig& cfg,
                   std::vector<Sample>& out) {
  const int n = cfg.t_samples;
  const double h = delta / (n - 1);
  std::size_t first = out.size();
  for (int j = 0; j < n; ++j) {
    const double t = j == n - 1 ? delta : j * h;
    out.push_back({t, defect(t)});
  }
  std::size_t best = first;
  for (std::size_t k = first; k < out.size(); ++k) {
    if (out[k].value > out[best].value) best = k;
  }
  const double center = out[best].t;
  const double fine = h / cfg.refine;
  for (int k = -cfg.refine + 1; k < cfg.refine; ++k) {
    if (k == 0) continue;
    const double t = center + k * fine;
    if (t <= 0.0 || t >= delta) continue;
    out.push_back({t, defect(t)});
  }
}

}  // namespace

double modulus(const Func& f, double delta, const SpaceParams& sp, const ModulusConfig& cfg) {
  check_modulus_args(delta, cfg);
  TranslationDefect defect(f, sp, cfg);
  std::vector<Sample> samples;
  sample_window(defect, delta, cfg, samples);
  double best = 0.0;
  for (const auto& s : samples) best = std::max(best, s.value);
  return best;
}

ModulusCurve modulus_curve(const Func& f, std::span<const double> deltas, const SpaceParams& sp,
                           const ModulusConfig& cfg) {
  for (double d : deltas) check_modulus_args(d, cfg);
  TranslationDefect defect(f, sp, cfg);
  std::vector<Sample> samples;
  for (double d : deltas) sample_window(defect, d, cfg, samples);

  ModulusCurve curve;
  curve.space = sp;
  curve.deltas.assign(deltas.begin(), deltas.end());
  curve.values.resize(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    double best = 0.0;
    for (const auto& s : samples) {
      if (s.t <= deltas[i]) best = std::max(best, s.value);
    }
    curve.values[i] = best;
  }
  return curve;
}

PhiFunction phi_power(double lambda) {
  std::ostringstream label;
  label << "power:" << lambda;
  return {[lambda](double t) { return std::pow(t, lambda); }, label.str()};
}

PhiFunction phi_power_log(double lambda, double kappa) {
  std::ostringstream label;
  label << "power_log:" << lambda << ":" << kappa;
  return {[lambda, kappa](double t) { return std::pow(t, lambda) * std::pow(1.0 - std::log(t), kappa); },
          label.str()};
}

PhiFunction parse_phi(const std::string& label) {
  std::vector<std::string> parts;
  std::stringstream ss(label);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  try {
    if (parts.size() == 2 && parts[0] == "power") return phi_power(std::stod(parts[1]));
    if (parts.size() == 3 && parts[0] == "power_log") {
      return phi_power_log(std::stod(parts[1]), std::stod(parts[2]));
    }
  } catch (const std::logic_error&) {
    // fall through to the diagnostic below
  }
  throw ConfigError("unknown phi '" + label + "' (expected power:<l> or power_log:<l>:<k>)");
}

PhiShapeConstants phi_shape_constants(const PhiFunction& phi, int grid_points) {
  if (grid_points < 4) throw ParameterDomainError("phi_shape_constants: grid too small");
  // Uniform points on (0,1] merged with a geometric grid down to 1e-8.
  std::vector<double> ts;
  ts.reserve(2 * grid_points);
  for (int i = 1; i <= grid_points; ++i) ts.push_back(static_cast<double>(i) / grid_points);
  for (int i = 0; i < grid_points; ++i) ts.push_back(std::pow(1e-8, static_cast<double>(i) / grid_points));
  std::sort(ts.begin(), ts.end());

  PhiShapeConstants out;
  out.c1 = 1.0;
  double running = 0.0;
  for (double t : ts) {
    const double v = phi(t);
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << "phi " << phi.label << " is negative or non-finite at t=" << t;
      throw ParameterDomainError(msg.str());
    }
    running = std::max(running, v);
    if (v > 0.0) {
      out.c1 = std::max(out.c1, running / v);
    } else if (running > 0.0) {
      out.c1 = kInfinity;
    }
    if (t <= 0.5) {
      const double v2 = phi(2.0 * t);
      if (v > 0.0) {
        out.c2 = std::max(out.c2, v2 / v);
      } else if (v2 > 0.0) {
        out.c2 = kInfinity;
      }
    }
  }
  return out;
}

namespace {

double phi_at_inverse(const PhiFunction& phi, double n) {
  const double v = phi(1.0 / n);
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "phi " << phi.label << " vanishes or is non-finite at 1/" << n;
    throw DegeneratePhiError(msg.str());
  }
  return v;
}

}  // namespace

PhiSumCheck phi_check_sum3(const PhiFunction& phi, double lambda0, int n_max, long n_cap) {
  if (lambda0 < 0.0) throw ParameterDomainError("phi_check_sum3: lambda0 must be >= 0");
  if (n_max < 1 || n_cap < 4 * static_cast<long>(n_max)) {
    throw ParameterDomainError("phi_check_sum3: need 1 <= n_max and n_cap >= 4 n_max");
  }
  const double e = 2.0 * lambda0 - 1.0;
  auto term = [&](double j) { return std::pow(j, e) * phi_at_inverse(phi, j); };

  PhiSumCheck out;
  const double a_far = term(static_cast<double>(n_cap));
  const double a_mid = term(static_cast<double>(n_cap / 2));
  out.decay_exponent = std::log2(a_mid / a_far);
  // sum_{j>N} a_j with a_j ~ a_N (N/j)^s is about a_N N/(s-1).
  out.bounded = out.decay_exponent > 1.0 + 1e-6;
  out.tail_bound = out.bounded ? a_far * static_cast<double>(n_cap) / (out.decay_exponent - 1.0) : kInfinity;

  // Suffix sums from the cap down, accumulated small-to-large.
  double suffix = out.bounded ? out.tail_bound : 0.0;
  for (long j = n_cap; j > n_max; --j) suffix += term(static_cast<double>(j));
  out.ratios.assign(n_max, 0.0);
  for (int n = n_max; n >= 1; --n) {
    // suffix currently holds sum_{j > n}.
    out.ratios[n - 1] = suffix / (std::pow(static_cast<double>(n), 2.0 * lambda0) * phi_at_inverse(phi, n));
    suffix += term(static_cast<double>(n));
  }
  out.constant = *std::max_element(out.ratios.begin(), out.ratios.end());
  return out;
}

PhiSumCheck phi_check_sum4(const PhiFunction& phi, int n_max) {
  if (n_max < 2) throw ParameterDomainError("phi_check_sum4: need n_max >= 2");
  auto term = [&](double j) { return j * phi_at_inverse(phi, j); };
  PhiSumCheck out;
  out.ratios.resize(n_max);
  double prefix = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    prefix += term(n);
    const double nn = n;
    out.ratios[n - 1] = prefix / (nn * nn * phi_at_inverse(phi, n));
  }
  out.constant = *std::max_element(out.ratios.begin(), out.ratios.end());
  // sum_{j<=n} a_j <= C n a_n needs a_j to grow faster than 1/j.
  out.decay_exponent = std::log2(term(n_max) / term(n_max / 2));
  out.bounded = out.decay_exponent > -1.0 + 1e-6;
  return out;
}

}  // namespace gentrans
