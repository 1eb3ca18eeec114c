#include "polylog/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "polylog/bernoulli.hpp"

namespace polylog {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier-compensated accumulation, one lane per component.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct CompensatedComplexSum {
  CompensatedSum re, im;
  void add(Complex z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

// ceil(ln(4/eps) / ln(3 + sqrt 8)): enough CVZ terms for full binary64.
constexpr int kCvzFullPrecisionTerms = 22;

}  // namespace

void SeriesParams::validate() const {
  if (!(tol > 0.0)) throw DomainError("SeriesParams: tol must be positive");
  if (max_terms < 1) throw DomainError("SeriesParams: max_terms must be >= 1");
}

double harmonic_number(std::int64_t n) {
  if (n < 0) throw DomainError("harmonic_number: n must be non-negative");
  CompensatedSum s;
  for (std::int64_t k = 1; k <= n; ++k) s.add(1.0 / static_cast<double>(k));
  return s.value();
}

EvalResult polylog_series(int p, Complex z, const SeriesParams& params) {
  params.validate();
  if (p < 1) throw DomainError("polylog_series: order must be >= 1");
  const double r = std::abs(z);
  if (!std::isfinite(r)) throw DomainError("polylog_series: non-finite argument");
  if (p == 1 ? !(r < 1.0) : r > kSeriesRadius) {
    throw DomainError("polylog_series: |z| = " + std::to_string(r) +
                      " outside the series disk");
  }

  EvalResult out;
  out.method = Method::series;
  if (r == 0.0) return out;

  CompensatedComplexSum acc;
  Complex zn{1.0, 0.0};
  double rn = 1.0;  // |z|^n tracked separately for the bound
  for (std::int64_t n = 1;; ++n) {
    zn = cmul(zn, z);
    rn *= r;
    const double np = std::pow(static_cast<double>(n), p);
    acc.add(zn / np);
    const double next = static_cast<double>(n + 1);
    const double bound = rn * r / (std::pow(next, p) * (1.0 - r));
    out.terms_or_evals = n;
    if (bound <= params.tol) {
      out.value = acc.value();
      out.err_estimate = bound;
      return out;
    }
    if (n >= params.max_terms) {
      out.value = acc.value();
      out.err_estimate = bound;
      throw ConvergenceError("polylog_series: max_terms reached", out);
    }
  }
}

double alternating_sum_accelerated(const std::function<double(std::int64_t)>& a, int n) {
  if (n < 1) throw DomainError("alternating_sum_accelerated: n must be >= 1");
  const double nn = n;
  double d = std::pow(3.0 + std::sqrt(8.0), nn);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (k + nn) * (k - nn) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

double zeta_int(int p) {
  if (p < 2) throw DomainError("zeta_int: p must be >= 2");
  if (p % 2 == 0 && p <= kMaxBernoulliDegree) {
    // 2 zeta(2k) = (-1)^{k-1} (2 pi)^{2k} B_{2k} / (2k)!
    const int k = p / 2;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double b = bernoulli_number(p).to_double();
    return sign * std::pow(2.0 * std::numbers::pi, p) * b / (2.0 * factorial(p));
  }
  const double eta = alternating_sum_accelerated(
      [p](std::int64_t k) { return std::pow(static_cast<double>(k + 1), -p); },
      kCvzFullPrecisionTerms + 4);
  return eta / (1.0 - std::pow(2.0, 1 - p));
}

double catalan_constant() {
  static const double g = alternating_sum_accelerated(
      [](std::int64_t k) {
        const double m = 2.0 * static_cast<double>(k) + 1.0;
        return 1.0 / (m * m);
      },
      kCvzFullPrecisionTerms + 4);
  return g;
}

EvalResult harmonic_gf_taylor(Complex z, const SeriesParams& params) {
  params.validate();
  const double r = std::abs(z);
  if (!(r <= 1.0 + 1e-15)) {
    throw DomainError("harmonic_gf_taylor: requires |z| <= 1");
  }
  EvalResult out;
  out.method = Method::series;
  if (r == 0.0) return out;

  const bool minus_one = z.imag() == 0.0 && z.real() == -1.0;
  CompensatedComplexSum acc;
  CompensatedSum harmonic;
  Complex zpow = z;  // z^{n+1}
  double rpow = r;
  for (std::int64_t n = 1;; ++n) {
    harmonic.add(1.0 / static_cast<double>(n));
    const double hn = harmonic.value();
    zpow = cmul(zpow, z);
    rpow *= r;
    const double m = static_cast<double>(n + 1);
    acc.add(zpow * (hn / (m * m)));

    // Remainder bounds, using H_k <= 1 + ln k and that (1 + ln k)/(k+1)^2
    // decreases for k >= 1.
    const double k1 = static_cast<double>(n + 1);
    double bound;
    if (minus_one) {
      const double h_next = hn + 1.0 / k1;
      bound = h_next / ((k1 + 1.0) * (k1 + 1.0));
    } else {
      bound = (2.0 + std::log(static_cast<double>(n))) / static_cast<double>(n);
      if (r < 1.0) {
        const double geometric = (1.0 + std::log(k1)) * rpow * r /
                                 ((k1 + 1.0) * (k1 + 1.0) * (1.0 - r));
        bound = std::min(bound, geometric);
      }
    }
    out.terms_or_evals = n;
    if (bound <= params.tol) {
      out.value = acc.value();
      out.err_estimate = bound;
      return out;
    }
    if (n >= params.max_terms) {
      out.value = acc.value();
      out.err_estimate = bound;
      throw ConvergenceError("harmonic_gf_taylor: max_terms reached", out);
    }
  }
}

double hsum_alternating_n2_partial(std::int64_t n_terms) {
  if (n_terms < 0) throw DomainError("hsum_alternating_n2_partial: negative count");
  CompensatedSum acc;
  CompensatedSum harmonic;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    harmonic.add(1.0 / static_cast<double>(n));
    const double m = static_cast<double>(n);
    const double term = harmonic.value() / (m * m);
    acc.add(n % 2 == 1 ? term : -term);
  }
  return acc.value();
}

EvalResult hsum_alternating_n2(const SeriesParams& params) {
  params.validate();
  // Terms needed for the CVZ factor 5.83^-n to reach tol.
  int n = static_cast<int>(std::ceil(std::log(2.0 / params.tol) / std::log(3.0 + std::sqrt(8.0))));
  n = std::max(n, 4);
  n = static_cast<int>(std::min<std::int64_t>(n, params.max_terms));

  auto term = [](std::int64_t k) {
    const double m = static_cast<double>(k + 1);
    return harmonic_number(k + 1) / (m * m);
  };
  const double coarse = alternating_sum_accelerated(term, n);
  const double fine = alternating_sum_accelerated(term, n + 6);

  EvalResult out;
  out.method = Method::series;
  out.value = fine;
  out.err_estimate = std::abs(fine - coarse) + 4.0 * kEps * std::abs(fine);
  out.terms_or_evals = n + 6;
  if (std::abs(fine - coarse) > std::max(params.tol, 8.0 * kEps * std::abs(fine)) &&
      n < params.max_terms) {
    throw ConvergenceError("hsum_alternating_n2: acceleration did not reach tol", out);
  }
  return out;
}

EvalResult polylog_log_series(int n, Complex z) {
  if (n < 2) throw DomainError("polylog_log_series: order must be >= 2");
  if (z == Complex{1.0, 0.0}) {
    return {Complex{zeta_int(n), 0.0}, 2.0 * kEps, 0, Method::closed_form};
  }
  const Complex mu = principal_log(z);
  if (std::abs(mu) > 4.0) {
    throw DomainError("polylog_log_series: |log z| too large for the expansion");
  }

  CompensatedComplexSum acc;
  double magnitude = 0.0;
  double previous = 0.0;
  Complex mu_k{1.0, 0.0};  // mu^k
  std::int64_t k = 0;
  constexpr std::int64_t kMaxTerms = 200;
  for (; k <= kMaxTerms; ++k) {
    if (k > 0) mu_k = cmul(mu_k, mu);
    const int s = n - static_cast<int>(k);
    Complex term{0.0, 0.0};
    if (s >= 2) {
      term = mu_k * (zeta_int(s) / factorial(static_cast<int>(k)));
    } else if (s == 1) {
      const Complex logarithmic = harmonic_number(n - 1) - principal_log(-mu);
      term = mu_k * logarithmic / factorial(static_cast<int>(k));
    } else if (s == 0) {
      term = mu_k * (-0.5 / factorial(static_cast<int>(k)));
    } else if ((-s) % 2 == 1) {
      // zeta(-m) = -B_j / j with j = m + 1 = k - n + 1 even. Then
      //   zeta(-m) / k! = -(B_j / j!) / (j * (j+1) * ... * k),
      // with B_j / j! ~ 2 (2 pi)^-j so nothing overflows.
      const int j = 1 - s;
      double b_over_factorial;  // B_j / j!
      if (j <= kMaxBernoulliDegree) {
        b_over_factorial = bernoulli_number(j).to_double() / factorial(j);
      } else {
        // B_{2i}/(2i)! = (-1)^{i+1} 2 zeta(2i) / (2 pi)^{2i}
        const double zeta_j = 1.0 + std::pow(2.0, -j) + std::pow(3.0, -j);
        const double sign = ((j / 2) % 2 == 1) ? 1.0 : -1.0;
        b_over_factorial = sign * 2.0 * zeta_j * std::pow(2.0 * std::numbers::pi, -j);
      }
      double tail = 1.0 / j;
      for (std::int64_t q = j + 1; q <= k; ++q) tail /= static_cast<double>(q);
      term = mu_k * (-b_over_factorial * tail);
    }
    acc.add(term);
    const double at = std::abs(term);
    magnitude += at;
    if (k > n + 2 && at + previous <= 1e-18 * std::max(1.0, std::abs(acc.value()))) {
      break;
    }
    previous = at;
  }
  EvalResult out;
  out.value = acc.value();
  out.err_estimate = 8.0 * kEps * magnitude;
  out.terms_or_evals = k;
  out.method = Method::series;
  return out;
}

}  // namespace polylog
