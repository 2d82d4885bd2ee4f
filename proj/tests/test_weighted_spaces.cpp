#include <doctest.h>

#include <cmath>

#include "gentrans/errors.hpp"
#include "gentrans/func.hpp"
#include "gentrans/quadrature.hpp"
#include "gentrans/weighted_spaces.hpp"

using namespace gentrans;

namespace {

// Midpoint rule in theta, x = cos theta, for integrands with endpoint singularities.
double brute_norm(double (*f)(double), double p, double a, double b) {
  const int n = 400000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double th = (i + 0.5) * M_PI / n;
    const double x = std::cos(th);
    acc += std::pow(std::abs(f(x)) * std::pow(1 - x, a) * std::pow(1 + x, b), p) * std::sin(th);
  }
  return std::pow(acc * M_PI / n, 1.0 / p);
}

}  // namespace

TEST_CASE("space validity") {
  CHECK(SpaceParams{2, 0, 0}.is_valid());
  CHECK(SpaceParams{1, -0.9, 0.1}.is_valid());
  CHECK_FALSE(SpaceParams{1, -1.0, 0}.is_valid());
  CHECK_FALSE(SpaceParams{0.5, 0, 0}.is_valid());
  CHECK_FALSE(SpaceParams{2, 0, -0.5}.is_valid());
  CHECK(SpaceParams{kInfinity, 0, 0}.is_valid());
  CHECK_FALSE(SpaceParams{kInfinity, -0.1, 0}.is_valid());
  CHECK_THROWS_AS(require_valid({0.5, 0, 0}), ParameterDomainError);
  CHECK(SpaceParams{kInfinity, 0, 0}.inv_p() == 0.0);
}

TEST_CASE("norms of elementary functions") {
  CHECK(weighted_norm(Func::constant(1.0), {2, 0, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(weighted_norm(Func::constant(1.0), {1, 1.5, 0.5}) ==
        doctest::Approx(jacobi_weight_mass(1.5, 0.5)).epsilon(1e-12));
  CHECK(weighted_norm(Func::constant(-3.0), {kInfinity, 1, 1}) == doctest::Approx(3.0));
  const Func x = Func::from_sampler([](double t) { return t; }, "x");
  CHECK(weighted_norm(x, {kInfinity, 0, 0}) == doctest::Approx(1.0).epsilon(1e-5));
  // |x| (1-x) peaks at the left end
  CHECK(weighted_norm(x, {kInfinity, 1, 0}) == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("agrees with brute-force integration") {
  auto cube = [](double x) { return x * x * x - 0.3 * x; };
  auto absx = [](double x) { return std::sqrt(std::abs(x)); };
  for (auto [p, a, b] : {std::tuple{2.0, 1.5, 1.5}, std::tuple{3.0, 0.5, 1.0}, std::tuple{1.0, 0.0, 2.0},
                         std::tuple{1.5, -0.3, 0.2}}) {
    const Func f = Func::from_sampler(cube, "cube");
    // |cube|^p has interior kinks unless p = 2, which limits Gauss-Jacobi to ~1e-5.
    const double tol = p == 2.0 ? 1e-9 : 1e-4;
    CHECK(weighted_norm(f, {p, a, b}) == doctest::Approx(brute_norm(cube, p, a, b)).epsilon(tol));
    const Func g = Func::from_sampler(absx, "absx");
    CHECK(weighted_norm(g, {p, a, b}, {1024, 4097}) == doctest::Approx(brute_norm(absx, p, a, b)).epsilon(1e-3));
  }
}

TEST_CASE("norm rejects non-finite samples and wrong sample counts") {
  const Func bad = Func::from_sampler([](double x) { return x > 0.5 ? NAN : 1.0; }, "bad");
  CHECK_THROWS_AS(weighted_norm(bad, {2, 0, 0}), SamplingError);
  WeightedNorm n({2, 0, 0}, {32, 65});
  std::vector<double> v(10, 1.0);
  CHECK_THROWS_AS(n(v), ParameterDomainError);
}

TEST_CASE("chebyshev grid") {
  const auto g = chebyshev_grid(4097);
  CHECK(g.front() == doctest::Approx(-1.0 + kEndpointGap));
  CHECK(g.back() == doctest::Approx(1.0 - kEndpointGap));
  CHECK(g[2048] == 0.0);
  // clamping merges the outermost points; otherwise strictly increasing
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] >= g[i - 1]);
  for (std::size_t i = 3; i + 3 < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("lambda0 and translation bound exponents") {
  CHECK(lambda0_for_theorems({2, 1.5, 1.5}) == doctest::Approx(0.25));
  CHECK(lambda0_for_theorems({2, 1.0, 0.0}) == doctest::Approx(1.0));
  CHECK(lambda0_for_theorems({kInfinity, 2.0, 2.0}) == doctest::Approx(0.5));

  auto g = translation_bound_params({2, 2.0, 1.5}, 0.25);
  CHECK(g.gamma == 1.5);
  CHECK(g.gamma1 == doctest::Approx(0.5));
  CHECK(g.gamma2 == 0.0);
  CHECK(g.gamma3 == doctest::Approx(1.5 - 1.25 + 0.25));

  g = translation_bound_params({1, 0.5, 1.5}, 0.1);
  CHECK(g.gamma1 == 0.0);
  CHECK(g.gamma2 == doctest::Approx(1.0));
  CHECK(g.gamma3 == 0.0);
  CHECK(translation_bound_params({1, 2.0, 2.5}, 0.1).gamma3 == doctest::Approx(1.0));
  CHECK(translation_bound_params({2, 1.0, 1.0}, 0.1).gamma3 == 0.0);
  CHECK_THROWS_AS(translation_bound_params({2, 1, 1}, 0.5), ParameterDomainError);
}

TEST_CASE("regime predicates") {
  // Jackson-type estimate via D
  CHECK(validate_regime({2, 0.5, 0.5}, {1, 1}, Regime::lemma_E_D));
  CHECK_FALSE(validate_regime({2, 2.0, 2.0}, {1, 1}, Regime::lemma_E_D));
  CHECK_FALSE(validate_regime({2, 0.5, 0.25}, {1, 1}, Regime::lemma_E_D));
  CHECK(validate_regime({2, -0.25, -0.25}, {-0.5, -0.5}, Regime::lemma_E_D));
  CHECK_FALSE(validate_regime({2, 0.0, 0.0}, {-0.5, -0.5}, Regime::lemma_E_D));
  CHECK(validate_regime({2, 0.5, -0.25}, {1, -0.5}, Regime::lemma_E_D));
  CHECK(validate_regime({2, 0.5, 0.25}, {2, 0.5}, Regime::lemma_E_D));
  CHECK_FALSE(validate_regime({2, 0.25, 0.5}, {2, 0.5}, Regime::lemma_E_D));
  CHECK_FALSE(validate_regime({2, 0.5, 0.5}, {0, 0.5}, Regime::lemma_E_D));

  // direct / inverse / equivalence
  CHECK(validate_regime({2, 1.5, 1.5}, {}, Regime::thm_equiv));
  CHECK(validate_regime({2, 0.0, 0.0}, {}, Regime::thm_direct));
  CHECK_FALSE(validate_regime({2, 0.0, 0.0}, {}, Regime::thm_inverse));
  CHECK_FALSE(validate_regime({2, 2.6, 1.5}, {}, Regime::thm_direct));
  CHECK(validate_regime({kInfinity, 1.0, 1.0}, {}, Regime::thm_inverse));
  CHECK_FALSE(validate_regime({kInfinity, 0.5, 1.0}, {}, Regime::thm_inverse));

  // derivative theorems
  CHECK(validate_regime({2, 1, 1}, {2, 2}, Regime::thm_E_wD));
  CHECK_FALSE(validate_regime({2, 1, 1}, {0.5, 0.5}, Regime::thm_E_wD));
  CHECK_FALSE(validate_regime({2, 0.5, 0.5}, {2, 2}, Regime::thm_E_wD));

  const RegimeCheck rc = validate_regime({2, 3.0, 3.0}, {}, Regime::thm_direct);
  CHECK_FALSE(rc.ok);
  CHECK(rc.violation.find("alpha") != std::string::npos);
}
