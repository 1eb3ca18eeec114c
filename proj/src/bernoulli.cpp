#include "polylog/bernoulli.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "polylog/errors.hpp"

namespace polylog {
namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxBernoulliDegree) {
    throw DomainError("bernoulli: degree " + std::to_string(n) +
                      " outside [0, " + std::to_string(kMaxBernoulliDegree) + "]");
  }
}

const std::vector<Rational>& number_table() {
  static const std::vector<Rational> table = bernoulli_numbers(kMaxBernoulliDegree);
  return table;
}

template <class Build>
const BernoulliPoly& cached_poly(int n, Build build) {
  check_degree(n);
  using Table = std::array<BernoulliPoly, kMaxBernoulliDegree + 1>;
  static const Table table = [&] {
    Table t;
    for (int k = 0; k <= kMaxBernoulliDegree; ++k) t[k] = build(k);
    return t;
  }();
  return table[n];
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int n_max) {
  if (n_max < 0) {
    throw DomainError("bernoulli_numbers: n_max must be non-negative");
  }
  std::vector<Rational> b;
  b.reserve(n_max + 1);
  b.emplace_back(1);
  for (int n = 1; n <= n_max; ++n) {
    if (n >= 3 && n % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    Rational acc;
    for (int k = 0; k < n; ++k) {
      if (b[k].is_zero()) continue;
      acc += Rational(binomial(n + 1, k), 1) * b[k];
    }
    b.push_back(-acc / Rational(n + 1));
  }
  return b;
}

const Rational& bernoulli_number(int k) {
  check_degree(k);
  return number_table()[k];
}

Complex BernoulliPoly::eval(Complex x) const {
  Complex acc{0.0, 0.0};
  for (int k = degree; k >= 0; --k) {
    acc = cmul(acc, x) + coeffs[k].to_double();
  }
  return acc;
}

Rational BernoulliPoly::eval_exact(const Rational& x) const {
  Rational acc;
  for (int k = degree; k >= 0; --k) {
    acc = acc * x + coeffs[k];
  }
  return acc;
}

const BernoulliPoly& bernoulli_poly(int n) {
  return cached_poly(n, [](int deg) {
    BernoulliPoly p;
    p.degree = deg;
    p.coeffs.assign(deg + 1, Rational{});
    for (int k = 0; k <= deg; ++k) {
      p.coeffs[deg - k] = Rational(binomial(deg, k), 1) * number_table()[k];
    }
    return p;
  });
}

const BernoulliPoly& bernoulli_poly_about_half(int n) {
  // Distinct lambda type, so this cache gets its own static table.
  return cached_poly(n, [](int deg) {
    BernoulliPoly p;
    p.degree = deg;
    p.coeffs.assign(deg + 1, Rational{});
    for (int k = 0; k <= deg; ++k) {
      const Rational& bk = number_table()[k];
      if (bk.is_zero()) continue;
      // B_k(1/2) = (2^{1-k} - 1) B_k
      const Rational half_value =
          (Rational(1, static_cast<Rational::Int>(1) << k) * Rational(2) - Rational(1)) * bk;
      p.coeffs[deg - k] = Rational(binomial(deg, k), 1) * half_value;
    }
    return p;
  });
}

Complex bernoulli_eval(int n, Complex x) { return bernoulli_poly(n).eval(x); }

BernoulliPoly reflect_argument(const BernoulliPoly& p) {
  // p(1 - x) = sum_k c_k (1 - x)^k = sum_k c_k sum_j C(k,j) (-x)^j
  BernoulliPoly r;
  r.degree = p.degree;
  r.coeffs.assign(p.degree + 1, Rational{});
  for (int k = 0; k <= p.degree; ++k) {
    if (p.coeffs[k].is_zero()) continue;
    for (int j = 0; j <= k; ++j) {
      Rational term = p.coeffs[k] * Rational(binomial(k, j), 1);
      if (j % 2 == 1) term = -term;
      r.coeffs[j] += term;
    }
  }
  return r;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double fourier_bernoulli_partial(int p, double t, Parity parity, std::int64_t n_terms) {
  if (p < 1) throw DomainError("fourier_bernoulli_partial: p must be >= 1");
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("fourier_bernoulli_partial: t must lie in [0, 1]");
  }
  if (n_terms < 0) throw DomainError("fourier_bernoulli_partial: negative term count");

  const bool even = parity == Parity::even;
  const int order = even ? 2 * p : 2 * p + 1;
  const double sign = (p % 2 == 1) ? 1.0 : -1.0;  // (-1)^{p+1}
  const double prefactor = sign * factorial(order) /
                           (std::pow(2.0, order - 1) * std::pow(std::numbers::pi, order));

  double s = 0.0, c = 0.0;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    // Reduce n*t mod 1 before scaling by 2*pi.
    const double nt = std::fmod(static_cast<double>(n) * t, 1.0);
    const double angle = 2.0 * std::numbers::pi * nt;
    const double term = (even ? std::cos(angle) : std::sin(angle)) /
                        std::pow(static_cast<double>(n), order);
    const double y = term - c;
    const double tmp = s + y;
    c = (tmp - s) - y;
    s = tmp;
  }
  return prefactor * s;
}

}  // namespace polylog
