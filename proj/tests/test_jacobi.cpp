#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gentrans/errors.hpp"
#include "gentrans/expansion.hpp"
#include "gentrans/jacobi.hpp"
#include "gentrans/quadrature.hpp"

using namespace gentrans;

namespace {

// Textbook (unnormalised) recurrence, independent of the library's.
double classical_jacobi(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
    const double a2 = (c - 1.0) * (a * a - b * b);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double normalised_oracle(int n, double a, double b, double x) {
  return classical_jacobi(n, a, b, x) / classical_jacobi(n, a, b, 1.0);
}

}  // namespace

TEST_CASE("degree zero and the normalisation at one") {
  CHECK(jacobi_eval(0, {0.7, 0.2}, 0.3) == doctest::Approx(1.0));
  CHECK(jacobi_eval(5, {1.0, 0.5}, 1.0) == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.5, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    double nu = u(rng), mu = u(rng);
    if (nu < mu) std::swap(nu, mu);
    for (int n = 0; n <= 64; ++n) CHECK(std::abs(jacobi_eval(n, {nu, mu}, 1.0) - 1.0) <= 1e-9);
  }
}

TEST_CASE("P_1 closed form") {
  for (JacobiParams jp : {JacobiParams{0, 0}, JacobiParams{1, 0.5}, JacobiParams{2, -0.5}}) {
    for (double x : {-0.9, -0.2, 0.0, 0.35, 0.8}) {
      const double want = ((jp.nu + jp.mu + 2.0) * x + jp.nu - jp.mu) / (2.0 * (jp.nu + 1.0));
      CHECK(jacobi_eval(1, jp, x) == doctest::Approx(want).epsilon(1e-14));
    }
  }
}

TEST_CASE("matches the classical recurrence divided by its value at 1") {
  for (JacobiParams jp : {JacobiParams{0, 0}, JacobiParams{1, 0.5}, JacobiParams{2, -0.5}, JacobiParams{3.5, 1.5}}) {
    for (int n : {2, 3, 7, 16, 40}) {
      for (int i = 0; i <= 20; ++i) {
        const double x = -1.0 + 0.1 * i;
        CHECK(jacobi_eval(n, jp, x) == doctest::Approx(normalised_oracle(n, jp.nu, jp.mu, x)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("stable up to degree 512") {
  for (double x : {-0.999, -0.3, 0.5, 0.9999}) {
    const double v = jacobi_eval(512, {1.0, 0.5}, x);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) <= 1.0 + 1e-9);
  }
}

TEST_CASE("eigenvalue formula") {
  CHECK(jacobi_eigenvalue(0, {0.3, 0.1}) == 0.0);
  CHECK(jacobi_eigenvalue(1, {0, 0}) == doctest::Approx(2.0));
  CHECK(jacobi_eigenvalue(3, {1, 0.5}) == doctest::Approx(16.5));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(jacobi_eval(2, {0.0, 0.5}, 0.1), ParameterDomainError);
  CHECK_THROWS_AS(jacobi_eval(2, {-0.7, -0.7}, 0.1), ParameterDomainError);
  CHECK_THROWS_AS(jacobi_eval(-1, {0, 0}, 0.1), ParameterDomainError);
  CHECK_THROWS_AS(require_basis({-1.0, 0.0}), ParameterDomainError);
}

TEST_CASE("orthogonality under Gauss-Jacobi quadrature") {
  for (JacobiParams jp : {JacobiParams{0, 0}, JacobiParams{1, 0.5}, JacobiParams{2, -0.5}}) {
    const QuadratureRule& rule = gauss_jacobi_rule(48, jp.nu, jp.mu);
    for (int n = 0; n <= 32; n += 3) {
      const double hn = jacobi_norm_sq(n, jp.nu, jp.mu);
      CHECK(rule.integrate([&](double x) { return std::pow(jacobi_eval(n, jp, x), 2); }) ==
            doctest::Approx(hn).epsilon(1e-11));
      for (int m = n + 1; m <= 32; m += 4) {
        const double hm = jacobi_norm_sq(m, jp.nu, jp.mu);
        const double ip = rule.integrate([&](double x) { return jacobi_eval(n, jp, x) * jacobi_eval(m, jp, x); });
        CHECK(std::abs(ip) <= 1e-9 * std::sqrt(hn * hm));
      }
    }
  }
}

TEST_CASE("jacobi_values agrees with jacobi_eval and allows basis exponents below -1/2") {
  std::vector<double> p(20);
  jacobi_values(1.0, 0.5, 0.37, p);
  for (int k = 0; k < 20; ++k) CHECK(p[k] == doctest::Approx(jacobi_eval(k, {1.0, 0.5}, 0.37)).epsilon(1e-13));
  jacobi_values(-0.8, 0.3, 0.2, p);
  for (int k = 0; k < 20; ++k) CHECK(p[k] == doctest::Approx(normalised_oracle(k, -0.8, 0.3, 0.2)).epsilon(1e-10));
}

TEST_CASE("derivative factor maps into the shifted basis") {
  const double a = 1.0, b = 0.5, h = 1e-5;
  for (int k = 1; k <= 12; ++k) {
    for (double x : {-0.6, 0.1, 0.7}) {
      std::vector<double> lo(k + 1), hi(k + 1), shifted(k);
      jacobi_values(a, b, x - h, lo);
      jacobi_values(a, b, x + h, hi);
      jacobi_values(a + 1, b + 1, x, shifted);
      const double fd = (hi[k] - lo[k]) / (2 * h);
      CHECK(jacobi_derivative_factor(k, a, b) * shifted[k - 1] == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("expansion coefficients of simple functions") {
  const auto p3 = expand_in_jacobi([](double x) { return jacobi_eval(3, {1.0, 0.5}, x); }, 6, {1.0, 0.5});
  for (int k = 0; k < 6; ++k) CHECK(p3.coeffs()[k] == doctest::Approx(k == 3 ? 1.0 : 0.0).epsilon(1e-12));

  const auto one = expand_in_jacobi([](double) { return 1.0; }, 4, {0.5, 0.5});
  CHECK(one.coeffs()[0] == doctest::Approx(1.0));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(one.coeffs()[k]) < 1e-13);

  const auto sq = expand_in_jacobi([](double x) { return x * x; }, 4, {0, 0});
  CHECK(sq.coeffs()[0] == doctest::Approx(1.0 / 3.0));
  CHECK(std::abs(sq.coeffs()[1]) < 1e-14);
  CHECK(sq.coeffs()[2] == doctest::Approx(2.0 / 3.0));
  CHECK(std::abs(sq.coeffs()[3]) < 1e-14);
  CHECK(sq(1.0) == doctest::Approx(1.0));
}

TEST_CASE("expansion reproduces polynomials") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int deg : {3, 10, 25}) {
    std::vector<double> a(deg + 1);
    for (double& v : a) v = g(rng);
    auto poly = [&](double x) {
      double acc = 0.0;
      for (int k = deg; k >= 0; --k) acc = acc * x + a[k];
      return acc;
    };
    const auto e = expand_in_jacobi(poly, deg + 4, {2.0, -0.5});
    for (int i = 0; i <= 200; ++i) {
      const double x = (-1.0 + 1e-3) + i * (2.0 - 2e-3) / 200.0;
      CHECK(std::abs(e(x) - poly(x)) <= 1e-9 * (1.0 + std::abs(poly(x))));
    }
  }
}

TEST_CASE("non-finite samples are reported") {
  CHECK_THROWS_AS(expand_in_jacobi([](double x) { return 1.0 / x; }, 3, {0, 0}, 3 + 8), SamplingError);
  CHECK_THROWS_AS(expand_in_jacobi([](double) { return NAN; }, 3, {0, 0}), SamplingError);
}

TEST_CASE("expansion algebra, truncation and energy") {
  JacobiExpansion a({1, 0}, {1, 2, 3});
  JacobiExpansion b({1, 0}, {0.5, 0, 0, 4});
  const auto s = a + b;
  CHECK(s.size() == 4);
  CHECK(s.coeffs()[3] == 4.0);
  CHECK((a - a).degree() == -1);
  CHECK((2.0 * a).coeffs()[2] == 6.0);
  CHECK(a.truncated(2).size() == 2);
  CHECK(a.truncated(5).coeffs()[4] == 0.0);
  CHECK(a.energy(1) == doctest::Approx(4 * jacobi_norm_sq(1, 1, 0) + 9 * jacobi_norm_sq(2, 1, 0)));
  CHECK_THROWS_AS(a + JacobiExpansion({0, 0}, {1}), BasisMismatchError);

  const auto d = a.derivative();
  CHECK(d.params() == JacobiParams{2, 1});
  CHECK(d(0.3) == doctest::Approx((a(0.3 + 1e-6) - a(0.3 - 1e-6)) / 2e-6).epsilon(1e-7));
}
