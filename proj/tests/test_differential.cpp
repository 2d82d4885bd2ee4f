#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gentrans/differential.hpp"
#include "gentrans/errors.hpp"
#include "gentrans/jacobi.hpp"

using namespace gentrans;

namespace {

JacobiExpansion mode(int k, const JacobiParams& jp) {
  std::vector<double> c(k + 1, 0.0);
  c[k] = 1.0;
  return {jp, c};
}

}  // namespace

TEST_CASE("spectral map on single modes") {
  CHECK(apply_D_expansion(mode(0, {0.5, 0.5}), 1).degree() == -1);
  const auto d3 = apply_D_expansion(mode(3, {1, 0}), 1);
  CHECK(d3.coeffs()[3] == doctest::Approx(-15.0));
  const auto d2 = apply_D_expansion(mode(2, {0, 0}), 2);
  CHECK(d2.coeffs()[2] == doctest::Approx(36.0));
  const auto odd = apply_D_expansion(mode(2, {0, 0}), DOperator{{0, 0}, 3});
  CHECK(odd.coeffs()[2] == doctest::Approx(-216.0));
}

TEST_CASE("finite differences on simple functions") {
  const JacobiParams jp{1.5, 0.5};
  CHECK(std::abs(apply_D_pointwise(Func::constant(3.0), jp, 0.2)) < 1e-6);
  const Func x = Func::from_sampler([](double t) { return t; }, "x");
  for (double at : {-0.5, 0.0, 0.6}) {
    CHECK(apply_D_pointwise(x, jp, at) == doctest::Approx(jp.mu - jp.nu - (jp.nu + jp.mu + 2) * at).epsilon(1e-8));
  }
  const Func p4 = Func::from_expansion(mode(4, {0, 0}), "P4");
  CHECK(apply_D_pointwise(p4, {0, 0}, 0.3, 1e-4) == doctest::Approx(-20.0 * p4(0.3)).epsilon(1e-5));
}

TEST_CASE("spectral and pointwise application agree on random polynomials") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (JacobiParams jp : {JacobiParams{0, 0}, JacobiParams{1, 0.5}, JacobiParams{2, -0.5}}) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<double> c(13);
      for (double& v : c) v = g(rng);
      const JacobiExpansion e(jp, c);
      const Func f = Func::from_expansion(e, "random");
      const auto de = apply_D_expansion(e, 1);
      const auto d3 = e.derivative().derivative().derivative();
      const auto d4 = d3.derivative();
      const double h = kDefaultFdStep;
      for (int i = 0; i <= 36; ++i) {
        const double x = -0.9 + 0.05 * i;
        // central-difference truncation is governed by f''' and f''''
        const double scale = std::abs(d3(x)) + std::abs(d4(x));
        CHECK(std::abs(de(x) - apply_D_pointwise(f, jp, x, h)) <= std::max(1e-6, 10 * h * h * scale));
        CHECK(std::abs(de(x) - apply_D_pointwise(f, jp, x, h, true)) <= std::max(1e-6, 10 * h * h * scale));
      }
    }
  }
}

TEST_CASE("eigen-relation through exact derivative expansions") {
  for (JacobiParams jp : {JacobiParams{0, 0}, JacobiParams{1, 0.5}, JacobiParams{2, -0.5}}) {
    for (int n = 0; n <= 32; ++n) {
      const auto e = mode(n, jp);
      for (int i = 0; i <= 40; ++i) {
        const double x = -1.0 + 0.05 * i;
        const double lam = jacobi_eigenvalue(n, jp);
        const double pn = e(x);
        const double lhs = apply_D_via_derivatives(e, x) + lam * pn;
        CHECK(std::abs(lhs) <= 1e-7 * (1.0 + lam * std::abs(pn) + lam));
      }
    }
  }
}

TEST_CASE("analytic application") {
  const JacobiParams jp{1, 0};
  Func f = Func::from_sampler([](double x) { return std::exp(x); }, "exp");
  f.d1 = f.sampler;
  f.d2 = f.sampler;
  for (double x : {-0.7, 0.1, 0.8}) {
    const double want = (1 - x * x) * std::exp(x) + (jp.mu - jp.nu - (jp.nu + jp.mu + 2) * x) * std::exp(x);
    CHECK(apply_D_analytic(f, jp, x) == doctest::Approx(want).epsilon(1e-14));
    CHECK(apply_D_pointwise(f, jp, x, 1e-3, true) == doctest::Approx(want).epsilon(1e-9));
  }
  CHECK_THROWS_AS(apply_D_analytic(Func::from_sampler([](double x) { return x; }, "x"), jp, 0.0), ParameterDomainError);
}

TEST_CASE("commutes with truncation") {
  const JacobiExpansion e({1, 0.5}, {0.3, -1.2, 2.0, 0.7, -0.1, 0.05});
  const auto a = apply_D_expansion(e, 2).truncated(4);
  const auto b = apply_D_expansion(e.truncated(4), 2);
  REQUIRE(a.size() == b.size());
  for (int k = 0; k < a.size(); ++k) CHECK(a.coeffs()[k] == b.coeffs()[k]);
}

TEST_CASE("d_image routes") {
  const JacobiParams jp{2, 2};
  const Func spectral = Func::from_expansion(mode(3, jp), "P3");
  const Func d = d_image(spectral, DOperator{jp, 2});
  REQUIRE(d.expansion.has_value());
  CHECK(d(0.4) == doctest::Approx(std::pow(jacobi_eigenvalue(3, jp), 2) * spectral(0.4)));

  Func sq = Func::from_sampler([](double x) { return x * x; }, "x2");
  sq.d1 = [](double x) { return 2 * x; };
  sq.d2 = [](double) { return 2.0; };
  const Func dsq = d_image(sq, DOperator{jp, 1});
  CHECK(dsq(0.5) == doctest::Approx(2 * 0.75 - 6 * 0.5 * 2 * 0.5));
  CHECK_THROWS_AS(d_image(sq, DOperator{jp, 2}), ParameterDomainError);
  // expansion in a different basis cannot be mapped spectrally
  CHECK_THROWS_AS(d_image(Func::from_expansion(mode(3, {0, 0}), "P3"), DOperator{jp, 2}), ParameterDomainError);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(apply_D_expansion(mode(2, {0, 0}), DOperator{{1, 0}, 1}), BasisMismatchError);
  CHECK_THROWS_AS(apply_D_expansion(mode(2, {0, 0}), 0), ParameterDomainError);
  CHECK_THROWS_AS(apply_D_pointwise(Func::constant(1), {0, 0}, 0.9999, 1e-4), DomainError);
  CHECK_THROWS_AS(apply_D_pointwise(Func::constant(1), {0, 0}, 0.0, 0.0), ParameterDomainError);
  CHECK_THROWS_AS(DOperator({0.0, 0.5}, 1).validate(), ParameterDomainError);
}
