#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polylog/bernoulli.hpp"
#include "polylog/rational.hpp"

using namespace polylog;

TEST_CASE("rational normal form and arithmetic") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-7, 3).to_string() == "-7/3");
  CHECK(Rational(4).to_string() == "4");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational overflow is reported") {
  Rational big(static_cast<Rational::Int>(1) << 100, 1);
  CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(40, 20) == static_cast<Rational::Int>(137846528820LL));
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("Bernoulli numbers") {
  const auto b = bernoulli_numbers(12);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == Rational(0));
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[6] == Rational(1, 42));
  CHECK(b[12] == Rational(-691, 2730));
  // B_40 = -261082718496449122051 / 13530
  CHECK(int128_to_string(bernoulli_number(40).num()) == "-261082718496449122051");
  CHECK(int128_to_string(bernoulli_number(40).den()) == "13530");
  for (int k = 3; k <= 39; k += 2) CHECK(bernoulli_number(k).is_zero());
}

TEST_CASE("Bernoulli polynomials") {
  const BernoulliPoly& b2 = bernoulli_poly(2);
  REQUIRE(b2.degree == 2);
  CHECK(b2.coeffs[0] == Rational(1, 6));
  CHECK(b2.coeffs[1] == Rational(-1));
  CHECK(b2.coeffs[2] == Rational(1));
  const BernoulliPoly& b1 = bernoulli_poly(1);
  CHECK(b1.coeffs[0] == Rational(-1, 2));
  CHECK(b1.coeffs[1] == Rational(1));
  CHECK(bernoulli_poly(3).eval_exact(Rational(1, 2)).is_zero());
  for (int n = 0; n <= kMaxBernoulliDegree; ++n) {
    const BernoulliPoly& p = bernoulli_poly(n);
    CHECK(static_cast<int>(p.coeffs.size()) == n + 1);
    CHECK(p.coeffs[n] == Rational(1));
    CHECK(p.eval_exact(Rational(0)) == bernoulli_number(n));
    if (n != 1) CHECK(p.eval_exact(Rational(1)) == p.eval_exact(Rational(0)));
  }
  CHECK_THROWS_AS(bernoulli_poly(41), DomainError);
}

TEST_CASE("bernoulli_eval") {
  CHECK(bernoulli_eval(2, 0.5).real() == doctest::Approx(-1.0 / 12.0));
  for (int n = 0; n <= 10; ++n) {
    CHECK(bernoulli_eval(n, 0.0).real() == doctest::Approx(bernoulli_number(n).to_double()));
  }
  // B_4(x) = x^4 - 2x^3 + x^2 - 1/30 expanded term by term.
  const Complex x{1.0, 1.0};
  const Complex direct = x * x * x * x - 2.0 * x * x * x + x * x - 1.0 / 30.0;
  CHECK(std::abs(bernoulli_eval(4, x) - direct) <= 1e-15);
}

TEST_CASE("reflection symmetry B_n(1-x) = (-1)^n B_n(x)") {
  for (int n = 0; n <= 20; ++n) {
    const BernoulliPoly& p = bernoulli_poly(n);
    const BernoulliPoly r = reflect_argument(p);
    for (int k = 0; k <= n; ++k) CHECK(r.coeffs[k] == (n % 2 == 0 ? p.coeffs[k] : -p.coeffs[k]));
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k < 50; ++k) {
      const double x = u(rng);
      const double lhs = bernoulli_eval(n, 1.0 - x).real();
      const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * bernoulli_eval(n, x).real();
      const double scale = std::max(1.0, std::abs(bernoulli_number(n % 2 == 0 ? n : n - 1).to_double()));
      CHECK(std::abs(lhs - rhs) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("expansion about one half") {
  for (int n : {0, 1, 2, 5, 10, 17}) {
    const BernoulliPoly& h = bernoulli_poly_about_half(n);
    for (int j = 0; j <= n; ++j) {
      if ((n - j) % 2 == 1) CHECK(h.coeffs[j].is_zero());
    }
    const Complex y{0.3, -0.2};
    CHECK(std::abs(h.eval(y) - bernoulli_eval(n, 0.5 + y)) <= 1e-13);
  }
}

TEST_CASE("Fourier partial sums") {
  CHECK(fourier_bernoulli_partial(1, 0.5, Parity::even, 10000) == doctest::Approx(-1.0 / 12.0).epsilon(1e-8));
  CHECK(fourier_bernoulli_partial(1, 0.0, Parity::odd, 57) == 0.0);
  const double b4 = bernoulli_eval(4, 0.25).real();
  // Tail bound: prefactor * N^{1-2p} / (2p - 1).
  const double bound = 24.0 / (8.0 * std::pow(std::numbers::pi, 4)) * std::pow(1000.0, -3.0) / 3.0;
  CHECK(std::abs(fourier_bernoulli_partial(2, 0.25, Parity::even, 1000) - b4) <= bound);
  CHECK(fourier_bernoulli_partial(1, 0.3, Parity::odd, 20000) == doctest::Approx(bernoulli_eval(3, 0.3).real()).epsilon(1e-8));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(5) == 120.0);
  CHECK(factorial(20) == 2432902008176640000.0);
}
