#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polylog/continuation.hpp"
#include "polylog/inversion.hpp"
#include "polylog/quadrature.hpp"
#include "polylog/soliton.hpp"

using namespace polylog;
constexpr double kPi = std::numbers::pi;

TEST_CASE("inversion orders") {
  CHECK(inversion_order(1, Parity::even) == 2);
  CHECK(inversion_order(1, Parity::odd) == 3);
  CHECK(inversion_order(3, Parity::odd) == 7);
}

TEST_CASE("inversion identity on and off the unit circle") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int p = 1; p <= 3; ++p) {
    for (Parity par : {Parity::even, Parity::odd}) {
      for (int k = 0; k < 30; ++k) {
        const double t = 0.02 + 0.96 * u(rng);
        const Complex x = std::polar(1.0, 2.0 * kPi * t);
        CAPTURE(p);
        CAPTURE(x);
        CHECK(inversion_residual(p, par, x) <= 1e-9);
      }
      for (Complex x : {Complex{2.0, 1.0}, Complex{-3.0, 0.5}, Complex{0.4, -0.7}}) {
        CHECK(inversion_residual(p, par, x) <= 1e-9);
      }
    }
  }
}

TEST_CASE("inversion identity at x = -1 on both sides") {
  // Li_2(-1) + Li_2(-1) = -pi^2/6.
  CHECK(std::abs(inversion_rhs(1, Parity::even, -1.0) - Complex{-kPi * kPi / 6.0, 0.0}) <= 1e-13);
  CHECK(std::abs(inversion_lhs(1, Parity::even, -1.0) - Complex{-kPi * kPi / 6.0, 0.0}) <= 1e-13);
  CHECK_THROWS_AS(inversion_rhs(1, Parity::even, 0.0), DomainError);
  CHECK_THROWS_AS(inversion_rhs(0, Parity::even, 2.0), DomainError);
}

TEST_CASE("zeta(2p) rationals are exact") {
  CHECK(zeta_even_over_pi_power(1) == Rational(1, 6));
  CHECK(zeta_even_over_pi_power(2) == Rational(1, 90));
  CHECK(zeta_even_over_pi_power(3) == Rational(1, 945));
  CHECK(zeta_even_over_pi_power(4) == Rational(1, 9450));
}

TEST_CASE("naive closure is wrong at x = 1") {
  // Li2(1) + Li2(1) = pi^2/3 while the naive closure gives -i pi/6.
  const double r = inversion_residual_naive(2, 1.0);
  CHECK(r > 1.0);
  CHECK(std::abs(r - std::abs(Complex{kPi * kPi / 3.0, kPi / 6.0})) <= 1e-9);
}

TEST_CASE("closed moments against references") {
  // 30-digit references of int x^n sech^2(x - t) dx.
  CHECK(std::abs(soliton_moment_closed(0, 1.3) - 2.0) <= 1e-14);
  CHECK(std::abs(soliton_moment_closed(1, 0.7) - 1.4) <= 1e-14);
  for (double t : {-1.0, 0.0, 0.5, 2.0}) {
    CHECK(std::abs(soliton_moment_closed(2, t) - (kPi * kPi / 6.0 + 2.0 * t * t)) <= 1e-12 * (1.0 + t * t));
  }
  CHECK(std::abs(soliton_moment_closed(3, 0.5) - 2.7174011002723396547) <= 1e-13);
  CHECK(std::abs(soliton_moment_closed(4, 0.0) - 5.6821969769834755055) <= 1e-13);
  CHECK(std::abs(soliton_moment_closed(4, 2.0) - 77.160614581340909981) <= 1e-11);
  CHECK(std::abs(soliton_moment_closed(5, 0.5) - 16.324160026018971809) <= 1e-12);
  CHECK(std::abs(soliton_moment_closed(6, 0.0) - 44.349799108384579684) <= 1e-12);
  CHECK(std::abs(soliton_moment_closed(6, 2.0) - 908.06579377096745477) <= 1e-10);
  CHECK_THROWS_AS(soliton_moment_closed(41, 0.0), DomainError);
}

TEST_CASE("closed moments against quadrature") {
  for (int n = 0; n <= 8; ++n) {
    for (double t : {-1.5, 0.0, 0.8, 3.0}) {
      const double q = sech2_moment_quadrature(n, t);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(std::abs(soliton_moment_closed(n, t) - q) <= 1e-9 * std::max(1.0, std::abs(q)));
    }
  }
}

TEST_CASE("real exponent polylog form reproduces the moments") {
  for (int p = 1; p <= 3; ++p) {
    for (double t : {-1.0, 0.0, 0.4, 1.5}) {
      const double even = soliton_moment_polylog(p, t, Parity::even, MomentForm::real_exponent);
      const double odd = soliton_moment_polylog(p, t, Parity::odd, MomentForm::real_exponent);
      CAPTURE(p);
      CAPTURE(t);
      CHECK(std::abs(even - soliton_moment_closed(2 * p, t)) <= 1e-9 * std::max(1.0, std::abs(even)));
      CHECK(std::abs(odd - soliton_moment_closed(2 * p + 1, t)) <= 1e-9 * std::max(1.0, std::abs(odd)));
    }
  }
}

TEST_CASE("oscillatory form misses M_2(0)") {
  const double v = soliton_moment_polylog(1, 0.0, Parity::even, MomentForm::oscillatory);
  CHECK(std::abs(v + kPi * kPi / 6.0) <= 1e-12);
  CHECK(std::abs(v - soliton_moment_closed(2, 0.0)) > 3.0);
}
