#include "polylog/soliton.hpp"

#include <cmath>
#include <numbers>

#include "polylog/continuation.hpp"
#include "polylog/errors.hpp"

namespace polylog {

double soliton_moment_closed(int n, double t) {
  if (n < 0 || n > kMaxBernoulliDegree) {
    throw DomainError("soliton_moment_closed: requires 0 <= n <= 40");
  }
  if (!std::isfinite(t)) throw DomainError("soliton_moment_closed: t must be finite");
  constexpr double kPi = std::numbers::pi;
  // B_n(1/2 + y) = sum c_j y^j over j = n mod 2, y = i t / pi, so
  // (-i)^n (i t/pi)^j pi^n = (-1)^{n + (n+j)/2} t^j pi^{n-j}.
  const BernoulliPoly& half = bernoulli_poly_about_half(n);
  double sum = 0.0;
  for (int j = n % 2; j <= n; j += 2) {
    const double c = half.coeffs[j].to_double();
    if (c == 0.0) continue;
    const int sign_exp = n + (n + j) / 2;
    const double sign = sign_exp % 2 == 0 ? 1.0 : -1.0;
    sum += sign * c * std::pow(t, j) * std::pow(kPi, n - j);
  }
  return 2.0 * sum;
}

double soliton_moment_polylog(int p, double t, Parity parity, MomentForm form) {
  if (p < 1) throw DomainError("soliton_moment_polylog: p must be >= 1");
  if (!std::isfinite(t)) throw DomainError("soliton_moment_polylog: t must be finite");
  const int n = parity == Parity::even ? 2 * p : 2 * p + 1;
  const double scale = factorial(n) / std::ldexp(1.0, parity == Parity::even ? 2 * p - 1 : 2 * p);

  Complex a, b;
  if (form == MomentForm::real_exponent) {
    a = Complex{-std::exp(-2.0 * t), 0.0};
    b = Complex{-std::exp(2.0 * t), 0.0};
  } else {
    a = -std::polar(1.0, -2.0 * t);
    b = -std::polar(1.0, 2.0 * t);
  }
  const Complex la = li_n(n, a).value;
  const Complex lb = li_n(n, b).value;

  if (form == MomentForm::real_exponent) {
    return parity == Parity::even ? -scale * (la + lb).real() : scale * (la - lb).real();
  }
  if (parity == Parity::even) {
    const double sign = p % 2 == 1 ? 1.0 : -1.0;
    return sign * scale * (la + lb).real();
  }
  return (kI * scale * (la - lb)).real();
}

}  // namespace polylog
