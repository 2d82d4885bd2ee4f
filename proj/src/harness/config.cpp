#include "gentrans/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "gentrans/errors.hpp"
#include "gentrans/harness/report.hpp"

namespace gentrans {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(trim(item));
  return out;
}

double to_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    throw ConfigError(what + ": '" + s + "' is not a number");
  }
  if (used != s.size() || !std::isfinite(v)) throw ConfigError(what + ": '" + s + "' is not a finite number");
  return v;
}

long long to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::logic_error&) {
    throw ConfigError(what + ": '" + s + "' is not an integer");
  }
  if (used != s.size()) throw ConfigError(what + ": '" + s + "' is not an integer");
  return v;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  const auto range = split(text, ':');
  std::vector<int> out;
  if (range.size() == 3) {
    if (range[2] != "double") throw ConfigError("n_list range must end in ':double'");
    long long v = to_int(range[0], "n_list");
    const long long stop = to_int(range[1], "n_list");
    if (v < 1 || stop < v) throw ConfigError("n_list range needs 1 <= start <= stop");
    for (; v <= stop; v *= 2) out.push_back(static_cast<int>(v));
    return out;
  }
  if (range.size() != 1) throw ConfigError("bad n_list '" + text + "'");
  for (const auto& item : split(text, ',')) {
    const long long v = to_int(item, "n_list");
    if (v < 1 || v > 4096) throw ConfigError("n_list entries must lie in [1, 4096]");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  const auto range = split(text, ':');
  std::vector<double> out;
  if (range.size() == 3) {
    if (range[2] != "halve") throw ConfigError("delta_list range must end in ':halve'");
    const double start = to_real(range[0], "delta_list");
    const double stop = to_real(range[1], "delta_list");
    if (!(start > 0.0 && stop > 0.0 && stop <= start)) throw ConfigError("delta_list range needs 0 < stop <= start");
    for (double v = start; v >= stop * (1.0 - 1e-12); v *= 0.5) out.push_back(v);
    return out;
  }
  if (range.size() != 1) throw ConfigError("bad delta_list '" + text + "'");
  for (const auto& item : split(text, ',')) out.push_back(to_real(item, "delta_list"));
  return out;
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfinity;
  const double p = to_real(text, "p");
  if (p < 1.0) throw ConfigError("p must be >= 1 or inf");
  return p;
}

void validate_lists(const ExperimentConfig& cfg) {
  if (cfg.n_list.empty()) throw ConfigError("n_list is empty");
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] < 1) throw ConfigError("n_list entries must be >= 1");
    if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1]) throw ConfigError("n_list must be strictly increasing");
  }
  if (cfg.delta_list.empty()) throw ConfigError("delta_list is empty");
  for (std::size_t i = 0; i < cfg.delta_list.size(); ++i) {
    const double d = cfg.delta_list[i];
    if (!(d > 0.0 && d <= 3.141592653589793)) throw ConfigError("delta_list entries must lie in (0, pi]");
    if (i > 0 && d >= cfg.delta_list[i - 1]) throw ConfigError("delta_list must be strictly decreasing");
  }
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(where + ": duplicate key '" + key + "'");
    try {
      if (key == "p") {
        cfg.sp.p = parse_p(value);
      } else if (key == "alpha") {
        cfg.sp.alpha = to_real(value, key);
      } else if (key == "beta") {
        cfg.sp.beta = to_real(value, key);
      } else if (key == "nu") {
        cfg.jp.nu = to_real(value, key);
      } else if (key == "mu") {
        cfg.jp.mu = to_real(value, key);
      } else if (key == "r") {
        cfg.r = static_cast<int>(to_int(value, key));
      } else if (key == "q") {
        cfg.q = static_cast<int>(to_int(value, key));
      } else if (key == "n_list") {
        cfg.n_list = parse_int_list(value);
      } else if (key == "delta_list") {
        cfg.delta_list = parse_real_list(value);
      } else if (key == "phi") {
        cfg.phi = value;
      } else if (key == "corpus") {
        cfg.corpus = split(value, ',');
      } else if (key == "seed") {
        const long long s = to_int(value, key);
        if (s < 0) throw ConfigError("seed must be >= 0");
        cfg.seed = static_cast<std::uint64_t>(s);
      } else if (key == "tolerances") {
        for (const auto& item : split(value, ',')) {
          const auto kv = split(item, ':');
          if (kv.size() != 2) throw ConfigError("tolerances: expected name:value");
          const double v = to_real(kv[1], "tolerances");
          if (kv[0] == "stability") {
            cfg.tol.stability = v;
          } else if (kv[0] == "slope") {
            cfg.tol.slope = v;
          } else if (kv[0] == "residual") {
            cfg.tol.residual = v;
          } else {
            throw ConfigError("tolerances: unknown name '" + kv[0] + "'");
          }
        }
      } else if (key == "rho") {
        cfg.rho = to_real(value, key);
      } else if (key == "sigma") {
        cfg.sigma = to_real(value, key);
      } else if (key == "trials") {
        cfg.trials = static_cast<int>(to_int(value, key));
      } else if (key == "output") {
        cfg.output_path = value;
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (!cfg.sp.is_valid()) throw ConfigError(source + ": invalid space " + cfg.sp.describe());
  if (!cfg.jp.is_standing()) throw ConfigError(source + ": need nu >= mu >= -1/2");
  if (cfg.r < 0) throw ConfigError(source + ": r must be >= 0");
  if (cfg.q < 1) throw ConfigError(source + ": q must be >= 1");
  if (cfg.trials < 1) throw ConfigError(source + ": trials must be >= 1");
  if (cfg.rho < 0.0 || cfg.sigma < 0.0) throw ConfigError(source + ": rho and sigma must be >= 0");
  validate_lists(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in, path);
}

std::vector<std::string> ExperimentConfig::describe() const {
  std::vector<std::string> out;
  auto join_ints = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  auto join_reals = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
    return s;
  };
  std::string corpus_text;
  for (std::size_t i = 0; i < corpus.size(); ++i) corpus_text += (i ? "," : "") + corpus[i];
  out.push_back("p=" + (sp.is_inf() ? std::string("inf") : fmt(sp.p)));
  out.push_back("alpha=" + fmt(sp.alpha));
  out.push_back("beta=" + fmt(sp.beta));
  out.push_back("nu=" + fmt(jp.nu));
  out.push_back("mu=" + fmt(jp.mu));
  out.push_back("r=" + std::to_string(r));
  out.push_back("q=" + std::to_string(q));
  out.push_back("n_list=" + join_ints(n_list));
  out.push_back("delta_list=" + join_reals(delta_list));
  out.push_back("phi=" + phi);
  out.push_back("corpus=" + corpus_text);
  out.push_back("seed=" + std::to_string(seed));
  out.push_back("tolerances=stability:" + fmt(tol.stability) + ",slope:" + fmt(tol.slope) +
                ",residual:" + fmt(tol.residual));
  out.push_back("rho=" + fmt(rho));
  out.push_back("sigma=" + fmt(sigma));
  out.push_back("trials=" + std::to_string(trials));
  return out;
}

}  // namespace gentrans
