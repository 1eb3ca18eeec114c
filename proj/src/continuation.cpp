#include "polylog/continuation.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>

#include "polylog/bernoulli.hpp"
#include "polylog/series.hpp"

namespace polylog {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kZeta2 = kPi * kPi / 6.0;

// Combines the closed-form terms of an identity with the evaluated
// sub-results: value = sum(terms) + sum(sign_i * sub_i).
struct Assembly {
  Complex value{};
  double magnitude = 0.0;
  double sub_err = 0.0;
  std::int64_t work = 0;

  void add(Complex term) {
    value += term;
    magnitude += std::abs(term);
  }
  void add(const EvalResult& r, double sign) {
    add(sign * r.value);
    sub_err += r.err_estimate;
    work += r.terms_or_evals;
  }
  EvalResult finish(Method m) const {
    return {value, sub_err + 8.0 * kEps * magnitude, work, m};
  }
};

bool is_real(Complex z) { return z.imag() == 0.0; }

EvalResult series2(Complex z) { return polylog_series(2, z); }

// Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z), with Li2(1-z) from the series.
EvalResult li2_reflect(Complex z) {
  Assembly a;
  a.add(Complex{kZeta2, 0.0});
  a.add(-principal_log(z) * principal_log(1.0 - z));
  a.add(series2(1.0 - z), -1.0);
  return a.finish(Method::reflection);
}

// Li2(z) = -Li2(z/(z-1)) - 1/2 log^2(1-z), with Li2(u) from the series or,
// failing that, from reflection once more.
EvalResult li2_landen(Complex z) {
  const Complex u = z / (z - 1.0);
  Assembly a;
  const Complex l = principal_log(1.0 - z);
  a.add(-0.5 * l * l);
  if (std::abs(u) <= kSeriesRadius) {
    a.add(series2(u), -1.0);
  } else {
    a.add(li2_reflect(u), -1.0);
  }
  return a.finish(Method::landen);
}

// Li2(z) = pi^2/6 - log z log(1-z) + Li2(1 - 1/z) + 1/2 log^2 z.
EvalResult li2_reflect_then_landen(Complex z) {
  Assembly a;
  const Complex lz = principal_log(z);
  a.add(Complex{kZeta2, 0.0});
  a.add(-lz * principal_log(1.0 - z));
  a.add(0.5 * lz * lz);
  a.add(series2(1.0 - 1.0 / z), 1.0);
  return a.finish(Method::reflection);
}

// Real x > 1: Li2(x) = pi^2/3 - 1/2 ln^2 x - i pi ln x - Li2(1/x).
EvalResult li2_invert_real(double x) {
  const double lx = std::log(x);
  const double u = 1.0 / x;
  Assembly a;
  a.add(Complex{kPi * kPi / 3.0 - 0.5 * lx * lx, -kPi * lx});
  if (u <= kSeriesRadius) {
    a.add(series2(u), -1.0);
  } else {
    a.add(li2_reflect(u), -1.0);
  }
  return a.finish(Method::inversion);
}

EvalResult closed(Complex v) { return {v, 4.0 * kEps * std::abs(v), 0, Method::closed_form}; }

}  // namespace

EvalResult li2(Complex z) {
  require_finite(z, "li2");
  if (std::abs(z) <= kSeriesRadius) return series2(z);
  if (z == Complex{1.0, 0.0}) return closed(kZeta2);
  if (is_real(z) && z.real() > 1.0) return li2_invert_real(z.real());
  if (z.real() <= 0.0) return li2_landen(z);
  if (std::abs(1.0 - z) <= kSeriesRadius) return li2_reflect(z);
  if (std::abs(1.0 - 1.0 / z) <= kSeriesRadius) return li2_reflect_then_landen(z);
  const double landen_u = std::abs(z / (z - 1.0));
  if (landen_u <= kSeriesRadius || 1.0 / std::abs(1.0 - z) <= kSeriesRadius) {
    return li2_landen(z);
  }
  return dilog_via_integral(-z);
}

EvalResult li3_one_minus_via_landen(double t) {
  if (!std::isfinite(t) || t < -1.0 || t >= 1.0 || t == 0.0) {
    throw DomainError("li3_one_minus_via_landen: requires t in [-1, 1), t != 0");
  }
  const Complex l1 = std::log1p(-t);
  const Complex lt = principal_log(Complex{t, 0.0});
  Assembly a;
  a.add(Complex{zeta_int(3), 0.0});
  a.add(l1 * l1 * l1 / 6.0);
  a.add(kZeta2 * l1);
  a.add(-0.5 * l1 * l1 * lt);
  a.add(li3(Complex{t, 0.0}), -1.0);
  a.add(li3(Complex{-t / (1.0 - t), 0.0}), -1.0);
  return a.finish(Method::landen);
}

EvalResult li3(Complex z, const QuadratureSpec& spec) {
  require_finite(z, "li3");
  if (std::abs(z) <= kSeriesRadius) return polylog_series(3, z);
  if (is_real(z)) {
    const double x = z.real();
    if (x == 1.0) return closed(zeta_int(3));
    if (x > kSeriesRadius && x < 1.0) return li3_one_minus_via_landen(1.0 - x);
    if (x > 1.0) {
      // Li3(x) = Li3(1/x) + pi^2/3 ln x - ln^3 x / 6 - i pi/2 ln^2 x.
      const double lx = std::log(x);
      Assembly a;
      a.add(Complex{kPi * kPi / 3.0 * lx - lx * lx * lx / 6.0, -0.5 * kPi * lx * lx});
      a.add(li3(Complex{1.0 / x, 0.0}, spec), 1.0);
      return a.finish(Method::inversion);
    }
    if (x < -1.0) {
      // Li3(x) = Li3(1/x) - pi^2/6 ln(-x) - ln^3(-x) / 6.
      const double lx = std::log(-x);
      Assembly a;
      a.add(Complex{-kZeta2 * lx - lx * lx * lx / 6.0, 0.0});
      a.add(li3(Complex{1.0 / x, 0.0}, spec), 1.0);
      return a.finish(Method::inversion);
    }
    // x in [-1, -0.75): Li3(x) = Li3(x^2)/4 - Li3(-x).
    Assembly a;
    a.add(li3(Complex{x * x, 0.0}, spec), 0.25);
    a.add(li3(Complex{-x, 0.0}, spec), -1.0);
    return a.finish(Method::landen);
  }
  return trilog_via_double_integral(-z, spec);
}

EvalResult li_n(int n, Complex z) {
  require_finite(z, "li_n");
  if (n < 1) throw DomainError("li_n: order must be >= 1");
  if (n == 1) {
    if (z == Complex{1.0, 0.0}) throw DomainError("li_n: Li_1 has a pole at z = 1");
    const Complex v = -principal_log1p(-z);
    return {v, 4.0 * kEps * std::abs(v), 0, Method::closed_form};
  }
  if (n == 2) return li2(z);
  if (n == 3) return li3(z);
  if (std::abs(z) <= kSeriesRadius) return polylog_series(n, z);
  if (z == Complex{1.0, 0.0}) return closed(zeta_int(n));
  if (std::abs(z) < 4.0 / 3.0) return polylog_log_series(n, z);
  if (n > kMaxBernoulliDegree) {
    throw DomainError("li_n: inversion needs Bernoulli degree <= 40");
  }
  // Li_n(z) = -(-1)^n Li_n(1/z) - (2 pi i)^n / n! B_n(1/2 + log(-z) / (2 pi i)).
  const Complex two_pi_i{0.0, 2.0 * kPi};
  const Complex s = 0.5 + principal_log(-z) / two_pi_i;
  const Complex closure = cpow_int(two_pi_i, n) / factorial(n) * bernoulli_eval(n, s);
  Assembly a;
  a.add(-closure);
  a.add(li_n(n, 1.0 / z), n % 2 == 0 ? -1.0 : 1.0);
  return a.finish(Method::inversion);
}

}  // namespace polylog
