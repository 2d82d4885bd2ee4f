#include "gentrans/harness/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "gentrans/best_approx.hpp"
#include "gentrans/errors.hpp"
#include "gentrans/harness/config.hpp"
#include "gentrans/harness/corpus.hpp"
#include "gentrans/harness/experiments.hpp"
#include "gentrans/smoothness.hpp"
#include "gentrans/translation.hpp"

namespace gentrans {

namespace {

constexpr int kExitConfig = 64;

struct SpaceArgs {
  std::string p = "2";
  double alpha = 0.0;
  double beta = 0.0;

  SpaceParams resolve() const {
    SpaceParams sp{parse_p(p), alpha, beta};
    if (!sp.is_valid()) throw ConfigError("invalid space " + sp.describe());
    return sp;
  }
};

void add_space_options(CLI::App* cmd, SpaceArgs& a) {
  cmd->add_option("--p", a.p, "exponent p >= 1 or 'inf'")->capture_default_str();
  cmd->add_option("--alpha", a.alpha, "weight exponent at x = 1")->capture_default_str();
  cmd->add_option("--beta", a.beta, "weight exponent at x = -1")->capture_default_str();
}

void print_coeffs(std::ostream& out, const JacobiExpansion& e) {
  out << "k,coefficient\n";
  for (int k = 0; k < e.size(); ++k) out << k << ',' << fmt(e.coeffs()[k]) << '\n';
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"generalized translation, modulus of smoothness and best approximation toolkit"};
  app.require_subcommand(1);

  std::string label;
  SpaceArgs space;
  double nu = 0.0, mu = 0.0;

  auto* ba = app.add_subcommand("bestapprox", "best approximation E_n(f) in L_{p,alpha,beta}");
  int n = 1;
  ba->add_option("--f", label, "corpus function")->required();
  ba->add_option("--n", n, "degree bound (degree <= n-1)")->required();
  add_space_options(ba, space);

  auto* mod = app.add_subcommand("modulus", "generalized modulus of smoothness on a delta list");
  std::string deltas = "0.4:0.025:halve";
  int t_samples = 16;
  mod->add_option("--f", label, "corpus function")->required();
  mod->add_option("--deltas", deltas, "comma list or start:stop:halve")->capture_default_str();
  mod->add_option("--t-samples", t_samples, "t grid points on [0, delta]")->capture_default_str();
  add_space_options(mod, space);

  auto* tr = app.add_subcommand("translate", "asymmetric or symmetric translation of f");
  double t = 0.0;
  std::string xs = "-0.5,0,0.5";
  bool symmetric = false;
  tr->add_option("--f", label, "corpus function")->required();
  tr->add_option("--t", t, "translation parameter")->required();
  tr->add_option("--x", xs, "comma list of points in (-1,1)")->capture_default_str();
  tr->add_flag("--sym", symmetric, "symmetric translation with (nu, mu)");
  tr->add_option("--nu", nu, "Jacobi nu")->capture_default_str();
  tr->add_option("--mu", mu, "Jacobi mu")->capture_default_str();

  auto* jk = app.add_subcommand("jackson", "Jackson-kernel polynomial construct");
  int q = 2, m = 2;
  jk->add_option("--f", label, "corpus function")->required();
  jk->add_option("--q", q, "kernel q")->capture_default_str();
  jk->add_option("--m", m, "kernel m")->capture_default_str();
  jk->add_flag("--sym", symmetric, "symmetric construct with (nu, mu)");
  jk->add_option("--nu", nu, "Jacobi nu")->capture_default_str();
  jk->add_option("--mu", mu, "Jacobi mu")->capture_default_str();
  add_space_options(jk, space);

  auto* vf = app.add_subcommand("verify", "run an experiment from a config file");
  std::string kind, config_path, output;
  vf->add_option("kind", kind, "bernstein | direct | inverse | equivalence | derivative")
      ->required()
      ->check(CLI::IsMember({"bernstein", "direct", "inverse", "equivalence", "derivative"}));
  vf->add_option("--config", config_path, "experiment config file")->required();
  vf->add_option("--output", output, "report path (default: config 'output' or stdout)");

  auto* cp = app.add_subcommand("corpus", "test-function corpus");
  std::string action;
  cp->add_option("action", action, "list")->required()->check(CLI::IsMember({"list"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*ba) {
      const SpaceParams sp = space.resolve();
      const ApproxResult r = best_approx(make_corpus_function(label), n, sp);
      out << "f,n,p,alpha,beta,method,iterations,error\n"
          << label << ',' << n << ',' << space.p << ',' << fmt(sp.alpha) << ',' << fmt(sp.beta) << ','
          << method_name(r.method) << ',' << r.iterations << ',' << fmt(r.error) << '\n';
      print_coeffs(out, r.poly);
      return 0;
    }
    if (*mod) {
      const SpaceParams sp = space.resolve();
      const std::vector<double> ds = parse_real_list(deltas);
      const Func f = make_corpus_function(label);
      double smallest = ds.front();
      for (double d : ds) smallest = std::min(smallest, d);
      ModulusConfig mc = modulus_resolution(f, smallest, sp);
      mc.t_samples = t_samples;
      const ModulusCurve c = modulus_curve(f, ds, sp, mc);
      out << "delta,omega\n";
      for (std::size_t i = 0; i < ds.size(); ++i) out << fmt(c.deltas[i]) << ',' << fmt(c.values[i]) << '\n';
      return 0;
    }
    if (*tr) {
      const Func f = make_corpus_function(label);
      out << "x,value\n";
      for (double x : parse_real_list(xs)) {
        const double v = symmetric ? symmetric_translate(f, t, x, {nu, mu}) : asymmetric_translate(f, t, x);
        out << fmt(x) << ',' << fmt(v) << '\n';
      }
      return 0;
    }
    if (*jk) {
      const SpaceParams sp = space.resolve();
      const Func f = make_corpus_function(label);
      const ApproxResult r = symmetric ? jackson_operator_sym(f, {q, m}, {nu, mu}, sp)
                                       : jackson_operator_asym(f, {q, m}, sp);
      out << "method,q,m,degree_bound,tail_ratio,error\n"
          << method_name(r.method) << ',' << q << ',' << m << ',' << r.degree_bound - 1 << ','
          << fmt(r.tail_ratio) << ',' << fmt(r.error) << '\n';
      print_coeffs(out, r.poly);
      return 0;
    }
    if (*vf) {
      ExperimentConfig cfg = load_config(config_path);
      if (!output.empty()) cfg.output_path = output;
      RateReport rep;
      if (kind == "bernstein") {
        rep = verify_bernstein_markov(cfg);
      } else if (kind == "direct") {
        rep = verify_direct_theorem(cfg);
      } else if (kind == "inverse") {
        rep = verify_inverse_theorem(cfg);
      } else if (kind == "equivalence") {
        rep = verify_equivalence(cfg);
      } else {
        rep = verify_derivative_theorems(cfg);
      }
      if (cfg.output_path.empty()) {
        out << render_report(rep);
      } else {
        write_report(rep, cfg.output_path);
        out << "verdict,fitted_exponent,residual,constant\n"
            << verdict_name(rep.verdict) << ',' << fmt(rep.fitted_exponent) << ',' << fmt(rep.fit_residual) << ','
            << fmt(rep.measured_constant) << '\n';
      }
      return exit_code(rep.verdict);
    }
    if (*cp) {
      for (const auto& e : corpus_catalogue()) out << e.pattern << "\t" << e.description << '\n';
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParameterDomainError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitConfig;
}

}  // namespace gentrans
