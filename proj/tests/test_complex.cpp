#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polylog/complex.hpp"

using namespace polylog;
constexpr double kPi = std::numbers::pi;

TEST_CASE("principal_arg fixed points") {
  CHECK(principal_arg(1.0, 0.0) == 0.0);
  CHECK(principal_arg(-1.0, 0.0) == kPi);
  CHECK(principal_arg(-1.0, -0.0) == kPi);
  CHECK(principal_arg(1.0, 1.0) == doctest::Approx(std::atan2(1.0, 1.0)).epsilon(1e-15));
  CHECK(principal_arg(0.0, 2.0) == doctest::Approx(kPi / 2));
  CHECK(principal_arg(0.0, -2.0) == doctest::Approx(-kPi / 2));
  CHECK_THROWS_AS(principal_arg(0.0, 0.0), DomainError);
}

TEST_CASE("principal_arg just below the negative axis stays above -pi") {
  // -pi + 1e-300 rounds to -kPi, which still lies above the true -pi.
  const double a = principal_arg(-1.0, -1e-300);
  CHECK(a == std::atan2(-1e-300, -1.0));
  CHECK(a < 0.0);
  CHECK(principal_arg(-1.0, 1e-300) == doctest::Approx(kPi));
}

TEST_CASE("principal_arg agrees with atan2 and stays in [-kPi, kPi]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_real_distribution<double> e(-30.0, 30.0);
  double worst = 0.0;
  for (int k = 0; k < 1000000; ++k) {
    double x = u(rng), y = u(rng);
    if (k % 3 == 0) {
      x *= std::pow(10.0, e(rng));
      y *= std::pow(10.0, e(rng));
    }
    const double a = principal_arg(x, y);
    REQUIRE(a >= -kPi);
    REQUIRE(a <= kPi);
    worst = std::max(worst, std::abs(a - std::atan2(y, x)));
  }
  CHECK(worst <= 1e-15);
}

TEST_CASE("principal_log values") {
  CHECK(principal_log(-1.0) == Complex{0.0, kPi});
  CHECK(principal_log(1.0) == Complex{0.0, 0.0});
  const Complex l = principal_log(Complex{0.0, 2.0});
  CHECK(l.real() == doctest::Approx(std::log(2.0)));
  CHECK(l.imag() == doctest::Approx(kPi / 2));
  CHECK(principal_log(Complex{-3.0, -0.0}).imag() == kPi);
  CHECK_THROWS_AS(principal_log(0.0), DomainError);
}

TEST_CASE("principal_log conjugation and exp round trip") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int k = 0; k < 10000; ++k) {
    const Complex z{u(rng), u(rng)};
    const Complex l = principal_log(z);
    CHECK(std::abs(std::exp(l) - z) <= 1e-14 * std::abs(z));
    if (!(z.real() < 0.0 && z.imag() == 0.0)) {
      const Complex lc = principal_log(std::conj(z));
      CHECK(std::abs(lc - std::conj(l)) <= 4e-16 * std::max(1.0, std::abs(l)));
    }
  }
}

TEST_CASE("principal_log1p small argument") {
  const Complex w{1e-12, -2e-12};
  const Complex l = principal_log1p(w);
  // log(1+w) = w - w^2/2 + ...
  const Complex series = w - w * w / 2.0;
  CHECK(std::abs(l - series) <= 1e-27);
  CHECK_THROWS_AS(principal_log1p(-1.0), DomainError);
}

TEST_CASE("field arithmetic") {
  CHECK(cmul(kI, kI) == Complex{-1.0, 0.0});
  const Complex q = cdiv(1.0, Complex{1.0, 1.0});
  CHECK(q.real() == doctest::Approx(0.5));
  CHECK(q.imag() == doctest::Approx(-0.5));
  CHECK_THROWS_AS(cdiv(1.0, 0.0), DomainError);
  CHECK(cadd(Complex{1, 2}, Complex{3, 4}) == Complex{4, 6});
  CHECK(csub(Complex{1, 2}, Complex{3, 4}) == Complex{-2, -2});
  // Smith's algorithm keeps huge components finite.
  const Complex big = cdiv(Complex{1e300, 1e300}, Complex{1e300, 1e300});
  CHECK(big.real() == doctest::Approx(1.0));
}

TEST_CASE("cpow_int against repeated multiplication") {
  CHECK(cpow_int(Complex{1.0, 1.0}, 4) == Complex{-4.0, 0.0});
  const Complex z{0.7, -1.3};
  Complex r{1.0, 0.0};
  for (int n = 0; n <= 12; ++n) {
    CHECK(std::abs(cpow_int(z, n) - r) <= 1e-14 * std::abs(r));
    r *= z;
  }
  CHECK(std::abs(cpow_int(z, -3) - 1.0 / (z * z * z)) <= 1e-15);
  CHECK(cpow_int(z, 0) == Complex{1.0, 0.0});
}

TEST_CASE("finiteness guard") {
  CHECK(is_finite(Complex{1.0, 2.0}));
  CHECK_FALSE(is_finite(Complex{NAN, 0.0}));
  CHECK_THROWS_AS(require_finite(Complex{0.0, INFINITY}, "x"), DomainError);
}

TEST_CASE("complex literal grammar") {
  CHECK(*parse_complex_literal("2") == Complex{2.0, 0.0});
  CHECK(*parse_complex_literal("-0.5") == Complex{-0.5, 0.0});
  CHECK(*parse_complex_literal("1.3+1.2i") == Complex{1.3, 1.2});
  CHECK(*parse_complex_literal("1-2i") == Complex{1.0, -2.0});
  CHECK(*parse_complex_literal("i") == Complex{0.0, 1.0});
  CHECK(*parse_complex_literal("-i") == Complex{0.0, -1.0});
  CHECK(*parse_complex_literal("2.5i") == Complex{0.0, 2.5});
  CHECK(*parse_complex_literal("1e-3+2e-3i") == Complex{1e-3, 2e-3});
  CHECK(*parse_complex_literal("3,-4") == Complex{3.0, -4.0});
  CHECK_FALSE(parse_complex_literal(""));
  CHECK_FALSE(parse_complex_literal("abc"));
  CHECK_FALSE(parse_complex_literal("1+2j"));
  CHECK_FALSE(parse_complex_literal("1,"));
  CHECK_FALSE(parse_complex_literal("inf"));
}

TEST_CASE("format_complex uses 17 significant digits") {
  CHECK(format_complex(Complex{0.1, 0.0}) == "0.10000000000000001");
  CHECK(format_complex(Complex{1.0, -2.0}) == "1-2i");
}
