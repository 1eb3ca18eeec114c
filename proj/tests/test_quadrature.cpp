#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polylog/quadrature.hpp"
#include "polylog/series.hpp"

using namespace polylog;
constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kCatalan = 0.91596559417721901505;

TEST_CASE("integrate_adaptive basic integrals") {
  const EvalResult one = integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0);
  CHECK(one.value.real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.method == Method::integral);
  const EvalResult z2 = integrate_adaptive([](double t) { return -std::log1p(-t) / t; }, 0.0, 1.0);
  CHECK(std::abs(z2.value.real() - kPi * kPi / 6.0) <= 1e-12);
  CHECK(z2.err_estimate <= 1e-12);
  const double g = integrate_adaptive([](double t) { return std::atan(t) / t; }, 0.0, 1.0).value.real();
  CHECK(std::abs(g - kCatalan) <= 1e-14);
}

TEST_CASE("integrate_adaptive error estimate honours the tolerance") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  spec.rel_tol = 0.0;
  const EvalResult r = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, spec);
  CHECK(r.err_estimate <= 1e-9);
  CHECK(std::abs(r.value.real() - 2.0 / 3.0) <= r.err_estimate);
}

TEST_CASE("integrate_adaptive errors") {
  CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 1.0, 0.0), DomainError);
  try {
    integrate_adaptive([](double x) { return x > 0.3 ? NAN : 1.0; }, 0.0, 1.0);
    FAIL("expected NonFiniteIntegrand");
  } catch (const NonFiniteIntegrand& e) {
    CHECK(e.abscissa() > 0.3);
  }
  QuadratureSpec few;
  few.max_subdivisions = 3;
  few.abs_tol = 1e-15;
  few.rel_tol = 0.0;
  try {
    integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, few);
    FAIL("expected ToleranceNotMet");
  } catch (const ToleranceNotMet& e) {
    CHECK(std::abs(e.best().value.real() - 2.0) < 0.1);
  }
  QuadratureSpec bad;
  bad.abs_tol = 0.0;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, bad), DomainError);
}

TEST_CASE("dilog integral examples") {
  CHECK(std::abs(dilog_via_integral(1.0).value - Complex{-kPi * kPi / 12.0, 0.0}) <= 1e-13);
  const Complex li2_i = dilog_via_integral(Complex{0.0, -1.0}).value;
  CHECK(std::abs(li2_i.imag() - kCatalan) <= 1e-13);
  CHECK(std::abs(li2_i.real() + kPi * kPi / 48.0) <= 1e-13);
  const Complex z{0.3, 0.4};
  CHECK(std::abs(dilog_via_integral(z).value - polylog_series(2, -z).value) <= 1e-10);
  CHECK_THROWS_AS(dilog_via_integral(-1.0), CutViolation);
  CHECK_THROWS_AS(dilog_via_integral(-2.5), CutViolation);
  CHECK_NOTHROW(dilog_via_integral(Complex{-2.5, 1e-9}));
  CHECK_THROWS_AS(dilog_via_integral_polar(2.0, kPi), CutViolation);
}

TEST_CASE("dilog integral against the series on a grid") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const Complex z = std::polar(0.7 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    CHECK(std::abs(dilog_via_integral(z).value - polylog_series(2, -z).value) <= 1e-10);
  }
}

TEST_CASE("Cartesian and polar forms agree") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> r(0.0, 4.0), th(-3.1, 3.1);
  for (int k = 0; k < 100; ++k) {
    const double rad = r(rng), theta = th(rng);
    const Complex z = std::polar(rad, theta);
    CHECK(std::abs(dilog_via_integral_polar(rad, theta).value - dilog_via_integral(z).value) <= 1e-12);
  }
}

TEST_CASE("real arguments give a real dilogarithm") {
  for (double x = -0.99; x <= 6.0; x += 0.137) {
    CHECK(std::abs(dilog_via_integral(x).value.imag()) <= 1e-12);
  }
}

TEST_CASE("imaginary axis") {
  CHECK(std::abs(im_li2_imag_axis(1.0) - kCatalan) <= 1e-13);
  CHECK(im_li2_imag_axis(0.0) == 0.0);
  CHECK(std::abs(im_li2_imag_axis(0.5) - polylog_series(2, Complex{0.0, 0.5}).value.imag()) <= 1e-11);
  for (double y = -1.0; y <= 1.0; y += 0.1) {
    const double re = dilog_via_integral(Complex{0.0, y}).value.real();
    CHECK(std::abs(re - 0.25 * dilog_via_integral(y * y).value.real()) <= 1e-10);
  }
}

TEST_CASE("diagonal reduction") {
  CHECK(im_li2_diagonal(0.0, 1) == 0.0);
  CHECK(std::abs(im_li2_diagonal(1.0, 1) - dilog_via_integral(Complex{1.0, 1.0}).value.imag()) <= 1e-9);
  CHECK(im_li2_diagonal(0.25, -1) == -im_li2_diagonal(0.25, 1));
  CHECK_THROWS_AS(im_li2_diagonal(1.0, 0), DomainError);
}

TEST_CASE("plain arctan form fails where Re w > 1") {
  const Complex w{2.0, 1.0};
  // Li2(2+i) at 30 digits.
  const Complex li2_w{1.1866885370000578311, 2.4077407693457720017};
  const double err = std::abs(dilog_plain_arctan(w).value - li2_w);
  CHECK(err >= 1e-3);
  CHECK(std::abs(dilog_via_integral(-w).value - li2_w) <= 1e-12);
  CHECK(std::abs(dilog_plain_arctan(Complex{0.5, 0.4}).value - polylog_series(2, Complex{0.5, 0.4}).value) <= 1e-12);
}

TEST_CASE("trilog double integral") {
  CHECK(std::abs(trilog_via_double_integral(1.0).value.real() + 0.75 * kZeta3) <= 1e-11);
  const Complex li3_i{-3.0 * kZeta3 / 32.0, std::pow(kPi, 3) / 32.0};
  CHECK(std::abs(trilog_via_double_integral(Complex{0.0, -1.0}).value - li3_i) <= 1e-10);
  const Complex z{0.2, -0.3};
  CHECK(std::abs(trilog_via_double_integral(z).value - polylog_series(3, -z).value) <= 1e-8);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const Complex q = std::polar(0.7 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    CHECK(std::abs(trilog_via_double_integral(q).value - polylog_series(3, -q).value) <= 1e-8);
  }
  CHECK_THROWS_AS(trilog_via_double_integral(-3.0), CutViolation);
}

TEST_CASE("sech^2 moments") {
  CHECK(std::abs(sech2_moment_quadrature(0, 0.0) - 2.0) <= 1e-12);
  CHECK(std::abs(sech2_moment_quadrature(1, 0.0)) <= 1e-12);
  CHECK(std::abs(sech2_moment_quadrature(2, 0.0) - kPi * kPi / 6.0) <= 1e-12);
  // int x^4 sech^2(x - 2) dx at 30 digits.
  CHECK(std::abs(sech2_moment_quadrature(4, 2.0) - 77.160614581340909981) <= 1e-10);
  for (int n : {0, 3, 6}) {
    const double a = sech2_moment_quadrature(n, 1.0);
    const double b = sech2_moment_quadrature(n, 1.0, {}, 2.0 * (40.0 + n));
    CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a)));
  }
  CHECK_THROWS_AS(sech2_moment_quadrature(-1, 0.0), DomainError);
}
