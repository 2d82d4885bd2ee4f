#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gentrans/differential.hpp"
#include "gentrans/errors.hpp"
#include "gentrans/harness/cli.hpp"
#include "gentrans/harness/config.hpp"
#include "gentrans/harness/corpus.hpp"
#include "gentrans/harness/experiments.hpp"
#include "gentrans/harness/fit.hpp"
#include "gentrans/harness/report.hpp"

using namespace gentrans;
namespace fs = std::filesystem;

namespace {

ExperimentConfig config_from(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test");
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gentrans");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Runs the real executable; returns (exit status, stdout).
std::pair<int, std::string> spawn(const std::string& args) {
  const std::string cmd = std::string(GENTRANS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gentrans_test_harness";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

double field_after_header(const std::string& csv, const std::string& column) {
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::istringstream hs(header), rs(row);
  std::string h, v;
  while (std::getline(hs, h, ',') && std::getline(rs, v, ',')) {
    if (h == column) return std::stod(v);
  }
  FAIL("column not found: " << column);
  return 0.0;
}

const std::string kEquivalence =
    "p = 2\nalpha = 1.5\nbeta = 1.5\ncorpus = abs_pow:1\nn_list = 8:64:double\n"
    "delta_list = 0.4:0.05:halve\nphi = power:1.5\n";

}  // namespace

TEST_CASE("list parsing") {
  CHECK(parse_int_list("8:128:double") == std::vector<int>{8, 16, 32, 64, 128});
  CHECK(parse_int_list("4, 5,9") == std::vector<int>{4, 5, 9});
  CHECK(parse_real_list("0.4:0.05:halve").size() == 4);
  CHECK(parse_real_list("0.4:0.05:halve").back() == doctest::Approx(0.05));
  CHECK(parse_real_list("0.3,0.1") == std::vector<double>{0.3, 0.1});
  CHECK(parse_p("inf") == kInfinity);
  CHECK(parse_p("3") == 3.0);
  CHECK_THROWS_AS(parse_int_list("8:128:triple"), ConfigError);
  CHECK_THROWS_AS(parse_int_list("a,b"), ConfigError);
  CHECK_THROWS_AS(parse_real_list("0.4:0.05:double"), ConfigError);
  CHECK_THROWS_AS(parse_p("0.5"), ConfigError);
}

TEST_CASE("config files") {
  const auto cfg = config_from("# comment\n\np = inf\nalpha=1\nbeta = 2\nnu = 2\nmu = 1\nr = 2\n"
                               "corpus = abs_x, x2\nseed = 42\ntolerances = stability:5,slope:0.2\n");
  CHECK(cfg.sp.is_inf());
  CHECK(cfg.sp.beta == 2.0);
  CHECK(cfg.jp == JacobiParams{2, 1});
  CHECK(cfg.r == 2);
  CHECK(cfg.corpus == std::vector<std::string>{"abs_x", "x2"});
  CHECK(cfg.seed == 42);
  CHECK(cfg.tol.stability == 5.0);
  CHECK(cfg.tol.slope == doctest::Approx(0.2));
  CHECK(cfg.tol.residual == doctest::Approx(0.1));

  CHECK_THROWS_AS(config_from("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(config_from("p = 2\np = 3\n"), ConfigError);
  CHECK_THROWS_AS(config_from("p 2\n"), ConfigError);
  CHECK_THROWS_AS(config_from("alpha = x\n"), ConfigError);
  CHECK_THROWS_AS(config_from("nu = 0\nmu = 1\n"), ConfigError);
  CHECK_THROWS_AS(config_from("tolerances = speed:3\n"), ConfigError);
  CHECK_THROWS_AS(config_from("n_list = 8,4\n"), ConfigError);
  CHECK_THROWS_AS(config_from("delta_list = 0.1,0.2\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);

  // every resolved key is echoed
  const auto lines = cfg.describe();
  for (const char* key : {"p=", "alpha=", "nu=", "r=", "n_list=", "delta_list=", "phi=", "seed=", "tolerances="}) {
    bool found = false;
    for (const auto& l : lines) found = found || l.rfind(key, 0) == 0;
    CHECK_MESSAGE(found, key);
  }
}

TEST_CASE("slope fit recovers exact powers") {
  std::vector<double> s, v;
  for (double x = 0.5; x > 1e-3; x /= 2) {
    s.push_back(x);
    v.push_back(3.7 * std::pow(x, 1.37));
  }
  const auto fit = fit_log_slope(s, v);
  CHECK(std::abs(fit.slope - 1.37) < 1e-10);
  CHECK(std::abs(fit.intercept - std::log(3.7)) < 1e-10);
  CHECK(fit.residual < 1e-12);
  CHECK(fit.used == static_cast<int>(s.size()));
  v.back() = 1e-20;  // below the floor, ignored
  const auto f2 = fit_log_slope(s, v);
  CHECK(f2.used == static_cast<int>(s.size()) - 1);
  CHECK(std::abs(f2.slope - 1.37) < 1e-10);
}

TEST_CASE("verdicts and stability") {
  CHECK(exit_code(Verdict::pass) == 0);
  CHECK(exit_code(Verdict::fail) == 1);
  CHECK(exit_code(Verdict::inconclusive) == 2);
  CHECK(combine(Verdict::pass, Verdict::inconclusive) == Verdict::inconclusive);
  CHECK(combine(Verdict::fail, Verdict::inconclusive) == Verdict::fail);
  CHECK(std::string(verdict_name(Verdict::pass)) == "pass");
  const std::vector<double> r{0.5, 2.0, 0.0, 1.0};
  const auto st = measure_stability(r);
  CHECK_FALSE(st.all_zero);
  CHECK(st.variation == doctest::Approx(4.0));
  CHECK(measure_stability(std::vector<double>{0.0, 0.0}).all_zero);
}

TEST_CASE("report layout") {
  CHECK(fmt(0.1) == "0.10000000000000001");
  CHECK(fmt(kInfinity) == "inf");
  RateReport r;
  r.experiment = "demo";
  r.add_meta("config p", "2");
  Curve c;
  c.name = "f:1.E_n";
  c.rows.push_back({0.5, 0.25, 0.5, 0.5});
  c.verdict = Verdict::pass;
  r.curves.push_back(c);
  r.verdict = Verdict::pass;
  const std::string text = render_report(r);
  CHECK(text.find("# experiment: demo\n# config p: 2\n# curve: f:1.E_n\nscale,value,bound,ratio\n0.5,0.25,0.5,0.5\n"
                  "verdict,fitted_exponent,residual,constant\npass,") == 0);
  CHECK(text.find("# summary\nverdict,fitted_exponent,residual,constant\npass,") != std::string::npos);

  const fs::path p = scratch("layout.csv");
  write_report(r, p.string());
  std::ifstream in(p);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == text);
  CHECK(fs::exists(p.string() + ".f_1.E_n.dat"));
}

TEST_CASE("corpus") {
  CHECK(make_corpus_function("x2")(0.3) == doctest::Approx(0.09));
  CHECK(make_corpus_function("mono:5")(0.5) == doctest::Approx(1.0 / 32));
  CHECK(make_corpus_function("const:2.5")(0.1) == 2.5);
  CHECK(make_corpus_function("abs_x")(-0.4) == doctest::Approx(0.4));
  CHECK(make_corpus_function("sqrt_abs_x")(-0.25) == doctest::Approx(0.5));
  CHECK(make_corpus_function("abs_pow:1.5")(-0.25) == doctest::Approx(0.125));
  CHECK(make_corpus_function("exp").has_derivatives());
  CHECK(make_corpus_function("mode:3", {1, 0.5})(1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_corpus_function("sinc"), ConfigError);
  CHECK_THROWS_AS(make_corpus_function("mono:2.5"), ConfigError);
  CHECK_THROWS_AS(make_corpus_function("dtail:1"), ConfigError);
  CHECK_FALSE(corpus_catalogue().empty());

  // tail energy beyond n is exactly sum_{k >= n} k^{-2s}
  const JacobiParams jp{1, 1};
  const Func t = make_corpus_function("tail:2", jp);
  REQUIRE(t.expansion);
  double want = 0.0;
  for (int k = 10; k < kTailModes; ++k) want += std::pow(k, -4.0);
  CHECK(t.expansion->energy(10) == doctest::Approx(want).epsilon(1e-12));

  // D^r of dtail:r:s is tail:s up to the sign (-1)^r
  const Func d = make_corpus_function("dtail:2:1.5", {2, 2});
  const auto dd = d_image(d, DOperator{{2, 2}, 2});
  const auto ref = tail_coefficients(1.5, {2, 2});
  for (int k = 1; k < kTailModes; k += 17) CHECK(dd.expansion->coeffs()[k] == doctest::Approx(ref[k]).epsilon(1e-12));
}

TEST_CASE("r = 0 derivative run is the equivalence run") {
  auto cfg = config_from(kEquivalence);
  cfg.r = 0;
  CHECK(render_report(verify_derivative_theorems(cfg)) == render_report(verify_equivalence(cfg)));
}

TEST_CASE("experiment edge cases") {
  // direct theorem on a polynomial: E_n vanishes, ratios are zero
  auto direct = config_from("alpha = 1.5\nbeta = 1.5\ncorpus = x3\nn_list = 8,16\ndelta_list = 0.2,0.1\n");
  CHECK(verify_direct_theorem(direct).verdict == Verdict::pass);
  // inverse theorem on a polynomial: M = 0 is degenerate
  CHECK(verify_inverse_theorem(direct).verdict == Verdict::inconclusive);
  // regime violations are configuration errors
  auto bad = config_from(kEquivalence);
  bad.sp.alpha = bad.sp.beta = 0.0;
  CHECK_THROWS_AS(verify_equivalence(bad), ConfigError);
  // inverse with a phi whose summation condition fails
  auto div = config_from(kEquivalence);
  div.phi = "power:0.5";
  div.sp = {2, 2.4, 2.4};  // lambda0 = 1.15, needs phi(t) = o(t^2.3)
  CHECK_THROWS_AS(verify_inverse_theorem(div), ConfigError);
  auto empty = config_from(kEquivalence);
  empty.corpus.clear();
  CHECK_THROWS_AS(verify_equivalence(empty), ConfigError);
}

TEST_CASE("single mode: derivative run is trivially consistent") {
  auto cfg = config_from("alpha = 1\nbeta = 1\nnu = 2\nmu = 2\nr = 1\ncorpus = mode:5\nn_list = 8,16,32\n"
                         "delta_list = 0.4,0.2,0.1\n");
  const auto rep = verify_derivative_theorems(cfg);
  CHECK(rep.verdict != Verdict::fail);
  for (const auto& c : rep.curves) {
    if (c.name.find("E_n") != std::string::npos) {
      for (const auto& row : c.rows) CHECK(row.value < 1e-12);
    }
  }
}

TEST_CASE("Bernstein-Markov for Chebyshev polynomials in the uniform norm") {
  auto cfg = config_from("p = inf\nalpha = 0\nbeta = 0\nrho = 0\nsigma = 0\nn_list = 4:64:double\ntrials = 4\n");
  const auto rep = verify_bernstein_markov(cfg);
  CHECK(rep.verdict == Verdict::pass);
  for (const auto& c : rep.curves) {
    if (c.name == "derivative") {
      // (1-x^2)^{1/2} |T_{n-1}'| <= n - 1, and T_{n-1} is among the candidates
      for (const auto& row : c.rows) {
        CHECK(row.ratio <= 1.0 + 1e-6);
        CHECK(row.ratio >= (row.scale - 1) / row.scale * (1 - 1e-3));
      }
    }
  }
}

TEST_CASE("determinism") {
  auto cfg = config_from("p = 3\nalpha = 1\nbeta = 1\nn_list = 4,8,16\ntrials = 6\nseed = 9\n");
  CHECK(render_report(verify_bernstein_markov(cfg)) == render_report(verify_bernstein_markov(cfg)));
  auto eq = config_from(kEquivalence);
  CHECK(render_report(verify_equivalence(eq)) == render_report(verify_equivalence(eq)));
}

TEST_CASE("cli: plumbing and exit codes") {
  auto r = cli({"bestapprox", "--f", "abs_x", "--n", "2", "--p", "inf", "--alpha", "0", "--beta", "0"});
  CHECK(r.code == 0);
  CHECK(field_after_header(r.out, "error") == doctest::Approx(0.5).epsilon(1e-3));

  r = cli({"modulus", "--f", "abs_x", "--p", "2", "--alpha", "1.5", "--beta", "1.5", "--deltas", "0.4:0.0125:halve"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("delta,omega\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);

  r = cli({"translate", "--f", "one", "--t", "0.7", "--x", "0.3"});
  CHECK(r.code == 0);
  CHECK(field_after_header(r.out, "value") == doctest::Approx(1.0).epsilon(1e-10));

  r = cli({"jackson", "--f", "x", "--q", "2", "--m", "2", "--alpha", "1.5", "--beta", "1.5"});
  CHECK(r.code == 0);
  CHECK(field_after_header(r.out, "degree_bound") == 4);

  r = cli({"corpus", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("abs_pow") != std::string::npos);

  CHECK(cli({}).code == 64);
  CHECK(cli({"bestapprox", "--f", "abs_x"}).code == 64);
  CHECK(cli({"bestapprox", "--f", "nope", "--n", "2"}).code == 64);
  CHECK(cli({"bestapprox", "--f", "abs_x", "--n", "2", "--p", "0.3"}).code == 64);
  CHECK(cli({"verify", "sideways", "--config", "x"}).code == 64);
  CHECK(cli({"verify", "direct", "--config", "/nonexistent.cfg"}).code == 64);

  const fs::path bad = scratch("bad.cfg");
  write_file(bad, "p = 2\nweights = heavy\n");
  r = cli({"verify", "equivalence", "--config", bad.string()});
  CHECK(r.code == 64);
  CHECK(r.err.find("weights") != std::string::npos);
}

TEST_CASE("cli: verify writes reports and returns the verdict") {
  const fs::path cfgp = scratch("eq.cfg");
  write_file(cfgp, kEquivalence);
  const fs::path out = scratch("eq_report.csv");
  const auto r = cli({"verify", "equivalence", "--config", cfgp.string(), "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(out));
  CHECK(fs::exists(out.string() + ".abs_pow_1.E_n.dat"));
  CHECK(r.out.rfind("verdict,fitted_exponent,residual,constant\npass,", 0) == 0);

  // a failing stability tolerance makes the run fail with exit code 1
  const fs::path strict = scratch("strict.cfg");
  write_file(strict, kEquivalence + "tolerances = slope:0.0001\n");
  CHECK(cli({"verify", "equivalence", "--config", strict.string()}).code == 1);
}

TEST_CASE("executable: same exit codes and byte-identical repeated output") {
  const fs::path cfgp = scratch("eq_exe.cfg");
  write_file(cfgp, kEquivalence);
  const auto a = spawn("verify equivalence --config " + cfgp.string());
  const auto b = spawn("verify equivalence --config " + cfgp.string());
  CHECK(a.first == 0);
  CHECK(a.second == b.second);
  CHECK(a.second.find("# summary") != std::string::npos);
  CHECK(spawn("bestapprox --f abs_x --n 2 --p inf").first == 0);
  CHECK(spawn("verify direct --config /nonexistent.cfg").first == 64);
  CHECK(spawn("frobnicate").first == 64);
}
