#include <doctest.h>

#include <cmath>
#include <vector>

#include "polylog/generating_function.hpp"
#include "polylog/series.hpp"

using namespace polylog;
constexpr double kZeta3 = 1.2020569031595942854;

namespace {

// Direct partial sum of H_n t^{n+1}/(n+1)^2, used where it converges fast.
double f_direct(double t) {
  double h = 0.0, s = 0.0, p = t;
  for (int n = 1; n < 4000; ++n) {
    h += 1.0 / n;
    p *= t;
    s += h * p / ((n + 1.0) * (n + 1.0));
    if (std::abs(p) < 1e-20) break;
  }
  return s;
}

// 30-digit references.
const std::vector<std::pair<double, double>> kF = {
    {-1.0, 0.15025711289494928567}, {-0.7, 0.083665431632122949345},
    {-0.3, 0.018763058141466890065}, {0.3, 0.028191341084107024279},
    {0.5, 0.094753004230127705722}, {0.7, 0.2384964903681318053},
    {0.95, 0.76987433594116715701},
};

}  // namespace

TEST_CASE("unified closed form matches the references") {
  for (const auto& [t, f] : kF) {
    CAPTURE(t);
    CHECK(std::abs(harmonic_gf_unified(t).value.real() - f) <= 1e-13);
  }
  CHECK(std::abs(harmonic_gf_unified(1.0).value.real() - kZeta3) <= 1e-15);
  CHECK(std::abs(harmonic_gf_unified(-1.0).value.real() - kZeta3 / 8.0) <= 1e-14);
  CHECK(harmonic_gf_unified(0.0).value.real() == 0.0);
}

TEST_CASE("closed forms agree with the direct sum") {
  for (double t = -0.8; t <= 0.8; t += 0.1) {
    CAPTURE(t);
    CHECK(std::abs(harmonic_gf_unified(t).value.real() - f_direct(t)) <= 1e-13);
  }
  for (double t = 0.05; t <= 0.8; t += 0.05) {
    CHECK(std::abs(harmonic_gf_ramanujan(t).value.real() - f_direct(t)) <= 1e-13);
    CHECK(std::abs(harmonic_gf_alternating(t).value.real() - f_direct(-t)) <= 1e-13);
  }
}

TEST_CASE("ramanujan and unified forms agree on [0, 1]") {
  for (int k = 0; k <= 100; ++k) {
    const double t = k / 100.0;
    CAPTURE(t);
    CHECK(std::abs(harmonic_gf_ramanujan(t).value.real() - harmonic_gf_unified(t).value.real()) <= 1e-12);
  }
}

TEST_CASE("alternating sum is F(-t)") {
  for (int k = 0; k <= 100; ++k) {
    const double t = k / 100.0;
    CHECK(std::abs(harmonic_gf_alternating(t).value.real() - harmonic_gf_unified(-t).value.real()) <= 1e-12);
  }
  CHECK(std::abs(harmonic_gf_alternating(1.0).value.real() - kZeta3 / 8.0) <= 1e-14);
}

TEST_CASE("endpoint t near 0 stays accurate") {
  const double t = 1e-12;
  // F(t) ~ t^2/4 for small t.
  CHECK(std::abs(harmonic_gf_ramanujan(t).value.real() - 0.25 * t * t) <= 1e-9);
  CHECK(std::abs(harmonic_gf_unified(t).value.real() - 0.25 * t * t) <= 1e-20);
}

TEST_CASE("Taylor series against the closed form") {
  for (double t = -0.9; t <= 0.9; t += 0.15) {
    CHECK(std::abs(harmonic_gf_taylor(t).value.real() - harmonic_gf_unified(t).value.real()) <= 1e-12);
  }
  SeriesParams loose;
  loose.tol = 1e-5;
  loose.max_terms = 5000000;
  CHECK(std::abs(harmonic_gf_taylor(1.0, loose).value.real() - kZeta3) <= 1e-5);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(harmonic_gf_ramanujan(-0.1), DomainError);
  CHECK_THROWS_AS(harmonic_gf_ramanujan(1.1), DomainError);
  CHECK_THROWS_AS(harmonic_gf_alternating(-0.1), DomainError);
  CHECK_THROWS_AS(harmonic_gf_unified(1.5), DomainError);
  CHECK_THROWS_AS(harmonic_gf_unified(NAN), DomainError);
}
