#include "polylog/inversion.hpp"

#include <cmath>
#include <numbers>

#include "polylog/continuation.hpp"

namespace polylog {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check(int p, Complex x, const char* what) {
  if (p < 1) throw DomainError(std::string(what) + ": p must be >= 1");
  require_finite(x, what);
  if (x == Complex{}) throw DomainError(std::string(what) + ": x must be nonzero");
}

}  // namespace

int inversion_order(int p, Parity parity) { return parity == Parity::even ? 2 * p : 2 * p + 1; }

Complex inversion_lhs(int p, Parity parity, Complex x) {
  check(p, x, "inversion_lhs");
  const int n = inversion_order(p, parity);
  const Complex a = li_n(n, x).value;
  const Complex b = li_n(n, 1.0 / x).value;
  return parity == Parity::even ? a + b : a - b;
}

Complex inversion_rhs(int p, Parity parity, Complex x) {
  check(p, x, "inversion_rhs");
  const int n = inversion_order(p, parity);
  if (n > kMaxBernoulliDegree) throw DomainError("inversion_rhs: order exceeds Bernoulli table");
  const Complex s = 0.5 + principal_log(-x) / Complex{0.0, kTwoPi};
  const double sign = p % 2 == 1 ? 1.0 : -1.0;
  Complex prefactor = sign * std::pow(kTwoPi, n) / factorial(n);
  if (parity == Parity::odd) prefactor *= kI;
  return prefactor * bernoulli_eval(n, s);
}

double inversion_residual(int p, Parity parity, Complex x) {
  return std::abs(inversion_lhs(p, parity, x) - inversion_rhs(p, parity, x));
}

Complex inversion_rhs_naive(int n, Complex x) {
  if (n < 1 || n > kMaxBernoulliDegree) throw DomainError("inversion_rhs_naive: order out of range");
  require_finite(x, "inversion_rhs_naive");
  const Complex s = principal_log(x) / Complex{0.0, kTwoPi};
  return Complex{0.0, -kTwoPi} / factorial(n) * bernoulli_eval(n, s);
}

double inversion_residual_naive(int n, Complex x) {
  const Complex a = li_n(n, x).value;
  const Complex b = li_n(n, 1.0 / x).value;
  const Complex lhs = n % 2 == 0 ? a + b : a - b;
  return std::abs(lhs - inversion_rhs_naive(n, x));
}

Rational zeta_even_over_pi_power(int p) {
  if (p < 1 || 2 * p > kMaxBernoulliDegree) {
    throw DomainError("zeta_even_over_pi_power: requires 1 <= p <= 20");
  }
  // 2 zeta(2p) = (-1)^{p+1} (2 pi)^{2p} / (2p)! B_{2p}(0).
  Rational r = bernoulli_number(2 * p);
  for (int k = 1; k <= 2 * p; ++k) {
    if (k < 2 * p) r *= Rational(2);
    r /= Rational(k);
  }
  return p % 2 == 1 ? r : -r;
}

}  // namespace polylog
