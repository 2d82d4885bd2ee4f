#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "gentrans/jacobi.hpp"
#include "gentrans/weighted_spaces.hpp"

namespace gentrans {

struct Tolerances {
  double stability = 10.0;  // max/min of a ratio sequence
  double slope = 0.15;      // |slope_E - slope_omega|
  double residual = 0.1;    // RMS log residual of a slope fit
};

struct ExperimentConfig {
  std::vector<std::string> corpus;
  SpaceParams sp{2.0, 1.5, 1.5};
  JacobiParams jp{0.0, 0.0};
  int r = 1;
  int q = 2;
  std::vector<int> n_list{8, 16, 32, 64, 128};
  std::vector<double> delta_list{0.4, 0.2, 0.1, 0.05, 0.025};
  std::string phi = "power:1";
  std::uint64_t seed = 1;
  Tolerances tol;
  // Bernstein-Markov experiment only.
  double rho = 0.5;
  double sigma = 0.5;
  int trials = 8;
  std::string output_path;

  /// key=value lines of the fully resolved configuration, in a fixed order.
  std::vector<std::string> describe() const;
};

/// "4,8,16" or "start:stop:double".
std::vector<int> parse_int_list(const std::string& text);
/// "0.4,0.2" or "start:stop:halve" (stop inclusive when hit within 1e-12 relative).
std::vector<double> parse_real_list(const std::string& text);
/// "inf" or a number >= 1.
double parse_p(const std::string& text);

/// Flat key = value text, '#' comments, blank lines ignored. Unknown keys,
/// duplicate keys and malformed values throw ConfigError.
ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::string& path);

/// n_list strictly increasing, delta_list strictly decreasing within (0, pi].
void validate_lists(const ExperimentConfig& cfg);

}  // namespace gentrans
