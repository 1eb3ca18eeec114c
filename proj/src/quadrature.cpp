#include "polylog/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

namespace polylog {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 10-point Gauss / 21-point Kronrod abscissae and weights (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b, value, error, floor;
  bool operator<(const Panel& o) const { return error < o.error; }
};

double checked_eval(const RealFunction& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NonFiniteIntegrand("integrate_adaptive: non-finite integrand at x = " +
                                 std::to_string(x),
                             x);
  }
  return v;
}

Panel gauss_kronrod_21(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked_eval(f, center);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked_eval(f, center - dx);
    f2[j] = checked_eval(f, center + dx);
    const double s = f1[j] + f2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double floor = 50.0 * kEps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(floor, err);
  return {a, b, value, err, floor};
}

constexpr int kEvalsPerPanel = 21;

// Piecewise integrand at small t: below this the analytic limit is used.
constexpr double kRemovableCutoff = 1e-12;

double log_modulus_one_plus(double a_minus_1, double b) {
  // ln |1 + w| with w = (a_minus_1, b).
  const double q = a_minus_1 * (2.0 + a_minus_1) + b * b;
  if (std::abs(q) < 0.5) return 0.5 * std::log1p(q);
  return std::log(std::hypot(1.0 + a_minus_1, b));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0 || rel_tol > 0.0)) {
    throw DomainError("QuadratureSpec: abs_tol or rel_tol must be positive");
  }
  if (abs_tol < 0.0 || rel_tol < 0.0) {
    throw DomainError("QuadratureSpec: tolerances must be non-negative");
  }
  if (max_subdivisions < 1) {
    throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
  }
}

EvalResult integrate_adaptive(const RealFunction& f, double a, double b,
                              const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < b)) throw DomainError("integrate_adaptive: requires a < b");

  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod_21(f, a, b);
  double total = first.value;
  double total_err = first.error;
  double total_floor = first.floor;
  panels.push(first);
  std::int64_t evals = kEvalsPerPanel;

  auto result = [&] {
    EvalResult r;
    // Re-sum to shed drift from the running updates.
    double v = 0.0, e = 0.0;
    auto copy = panels;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
    r.value = Complex{v, 0.0};
    r.err_estimate = e;
    r.terms_or_evals = evals;
    r.method = Method::integral;
    return r;
  };

  int subdivisions = 1;
  while (total_err > std::max({spec.abs_tol, spec.rel_tol * std::abs(total), total_floor})) {
    if (subdivisions >= spec.max_subdivisions) {
      throw ToleranceNotMet("integrate_adaptive: tolerance not met within max_subdivisions",
                            result());
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod_21(f, worst.a, mid);
    const Panel right = gauss_kronrod_21(f, mid, worst.b);
    evals += 2 * kEvalsPerPanel;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_floor += left.floor + right.floor - worst.floor;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }
  return result();
}

namespace {

// Re and Im integrands of -Li2(-z) = int_0^1 log(1 + z t) / t dt.
struct DilogIntegrand {
  double x, y;

  double real_part(double t) const {
    if (t < kRemovableCutoff) return x;
    return log_modulus_one_plus(x * t, y * t) / t;
  }
  double imag_part(double t) const {
    if (t < kRemovableCutoff) return y;
    const double a = 1.0 + x * t;
    const double b = y * t;
    if (b == 0.0 && a > 0.0) return 0.0;
    return principal_arg(a, b) / t;
  }
};

EvalResult dilog_from_parts(const DilogIntegrand& g, const QuadratureSpec& spec) {
  const EvalResult re = integrate_adaptive([&](double t) { return g.real_part(t); }, 0.0, 1.0, spec);
  EvalResult out;
  out.value = Complex{-re.value.real(), 0.0};
  out.err_estimate = re.err_estimate;
  out.terms_or_evals = re.terms_or_evals;
  if (g.y != 0.0) {
    const EvalResult im = integrate_adaptive([&](double t) { return g.imag_part(t); }, 0.0, 1.0, spec);
    out.value = Complex{-re.value.real(), -im.value.real()};
    out.err_estimate += im.err_estimate;
    out.terms_or_evals += im.terms_or_evals;
  }
  out.method = Method::integral;
  return out;
}

}  // namespace

EvalResult dilog_via_integral(Complex z, const QuadratureSpec& spec) {
  require_finite(z, "dilog_via_integral");
  if (z.imag() == 0.0 && z.real() <= -1.0) {
    throw CutViolation("dilog_via_integral: z on the cut (-inf, -1]");
  }
  return dilog_from_parts(DilogIntegrand{z.real(), z.imag()}, spec);
}

EvalResult dilog_via_integral_polar(double r, double theta, const QuadratureSpec& spec) {
  if (!(r >= 0.0) || !std::isfinite(r) || !std::isfinite(theta)) {
    throw DomainError("dilog_via_integral_polar: requires finite r >= 0");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // theta = +-pi in binary64 has sin(theta) ~ 1e-16; treat it as on the axis.
  if (r >= 1.0 && c < 0.0 && (s == 0.0 || std::abs(theta) == std::numbers::pi)) {
    throw CutViolation("dilog_via_integral_polar: z on the cut (-inf, -1]");
  }
  // Same integrands, fed r cos(theta), r sin(theta) term by term.
  struct Polar {
    double r, c, s;
    double real_part(double t) const {
      if (t < kRemovableCutoff) return r * c;
      const double rt = r * t;
      const double q = 2.0 * rt * c + rt * rt;
      if (std::abs(q) < 0.5) return 0.5 * std::log1p(q) / t;
      return 0.5 * std::log(1.0 + q) / t;
    }
    double imag_part(double t) const {
      if (t < kRemovableCutoff) return r * s;
      const double rt = r * t;
      return principal_arg(1.0 + rt * c, rt * s) / t;
    }
  } g{r, c, s};
  const EvalResult re = integrate_adaptive([&](double t) { return g.real_part(t); }, 0.0, 1.0, spec);
  const EvalResult im = integrate_adaptive([&](double t) { return g.imag_part(t); }, 0.0, 1.0, spec);
  return {Complex{-re.value.real(), -im.value.real()}, re.err_estimate + im.err_estimate,
          re.terms_or_evals + im.terms_or_evals, Method::integral};
}

EvalResult dilog_plain_arctan(Complex w, const QuadratureSpec& spec) {
  require_finite(w, "dilog_plain_arctan");
  const double r = std::abs(w);
  const double c = r == 0.0 ? 1.0 : w.real() / r;
  const double s = r == 0.0 ? 0.0 : w.imag() / r;
  // Li2(r e^{i theta}) = -1/2 int_0^r ln(1 - 2 u cos + u^2)/u du + i int_0^r ..., u = r t.
  auto re_part = [&](double t) {
    if (t < kRemovableCutoff) return -r * c;
    const double rt = r * t;
    const double q = -2.0 * rt * c + rt * rt;
    const double lg = std::abs(q) < 0.5 ? std::log1p(q) : std::log(1.0 + q);
    return 0.5 * lg / t;
  };
  auto im_part = [&](double t) {
    if (t < kRemovableCutoff) return r * s;
    const double rt = r * t;
    const double den = 1.0 - rt * c;
    if (den == 0.0) return std::copysign(0.5 * std::numbers::pi, rt * s) / t;
    return std::atan(rt * s / den) / t;
  };
  const EvalResult re = integrate_adaptive(re_part, 0.0, 1.0, spec);
  const EvalResult im = integrate_adaptive(im_part, 0.0, 1.0, spec);
  return {Complex{-re.value.real(), im.value.real()}, re.err_estimate + im.err_estimate,
          re.terms_or_evals + im.terms_or_evals, Method::integral};
}

EvalResult trilog_via_double_integral(Complex z, const QuadratureSpec& spec) {
  require_finite(z, "trilog_via_double_integral");
  if (z.imag() == 0.0 && z.real() <= -1.0) {
    throw CutViolation("trilog_via_double_integral: z on the cut (-inf, -1]");
  }
  spec.validate();
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol / 10.0;
  inner.rel_tol = spec.rel_tol / 10.0;
  if (!(inner.abs_tol > 0.0)) inner.abs_tol = 0.0;

  std::int64_t evals = 0;
  // I(x) = int_0^1 log(1 + z x t) / (x t) dt; I(0) = z.
  auto inner_integral = [&](double x, bool imaginary) {
    if (x < kRemovableCutoff) return imaginary ? z.imag() : z.real();
    const DilogIntegrand g{z.real() * x, z.imag() * x};
    EvalResult r;
    if (imaginary) {
      r = integrate_adaptive([&](double t) { return g.imag_part(t) / x; }, 0.0, 1.0, inner);
    } else {
      r = integrate_adaptive([&](double t) { return g.real_part(t) / x; }, 0.0, 1.0, inner);
    }
    evals += r.terms_or_evals;
    return r.value.real();
  };

  const EvalResult re = integrate_adaptive([&](double x) { return inner_integral(x, false); },
                                           0.0, 1.0, spec);
  EvalResult out;
  out.value = Complex{-re.value.real(), 0.0};
  out.err_estimate = re.err_estimate;
  if (z.imag() != 0.0) {
    const EvalResult im = integrate_adaptive([&](double x) { return inner_integral(x, true); },
                                             0.0, 1.0, spec);
    out.value = Complex{-re.value.real(), -im.value.real()};
    out.err_estimate += im.err_estimate;
  }
  // Inner errors enter once more, bounded by their tolerance.
  out.err_estimate += std::max(inner.abs_tol, inner.rel_tol * std::abs(out.value));
  out.terms_or_evals = evals;
  out.method = Method::integral;
  return out;
}

double im_li2_imag_axis(double y, const QuadratureSpec& spec) {
  if (!std::isfinite(y)) throw DomainError("im_li2_imag_axis: y must be finite");
  if (y == 0.0) return 0.0;
  auto f = [y](double t) {
    if (t < kRemovableCutoff) return y;
    return std::atan(y * t) / t;
  };
  return integrate_adaptive(f, 0.0, 1.0, spec).value.real();
}

double im_li2_diagonal(double x, int sign, const QuadratureSpec& spec) {
  if (!std::isfinite(x)) throw DomainError("im_li2_diagonal: x must be finite");
  if (sign != 1 && sign != -1) throw DomainError("im_li2_diagonal: sign must be +1 or -1");
  if (x == 0.0) return 0.0;
  auto f = [x](double t) {
    if (t < kRemovableCutoff) return -x;
    const double u = 2.0 * x * t;
    // pi/4 - atan(1 + u) = atan(-u / (2 + u)) for u > -2.
    if (std::abs(u) < 0.5) return std::atan(-u / (2.0 + u)) / t;
    return (0.25 * std::numbers::pi - std::atan(1.0 + u)) / t;
  };
  return sign * integrate_adaptive(f, 0.0, 1.0, spec).value.real();
}

double sech2_moment_quadrature(int n, double t, const QuadratureSpec& spec,
                               std::optional<double> half_width) {
  if (n < 0) throw DomainError("sech2_moment_quadrature: n must be non-negative");
  if (!std::isfinite(t)) throw DomainError("sech2_moment_quadrature: t must be finite");
  spec.validate();

  double L = half_width.value_or(40.0 + n);
  if (!(L > 0.0)) throw DomainError("sech2_moment_quadrature: half width must be positive");
  if (!half_width) {
    auto tail = [&](double len) {
      const double e = std::exp(-2.0 * len);
      return 10.0 * 2.0 * std::pow(std::abs(t) + len, n) * 4.0 * e / (1.0 - e);
    };
    const double target = spec.abs_tol > 0.0 ? spec.abs_tol : spec.rel_tol;
    while (tail(L) >= target && L < 1000.0) L += 5.0;
  }

  // Shifted variable y = x - t, integrand (y + t)^n sech^2(y).
  auto sech2 = [](double y) {
    const double ay = std::abs(y);
    if (ay > 20.0) {
      const double e = std::exp(-2.0 * ay);
      return 4.0 * e / ((1.0 + e) * (1.0 + e));
    }
    const double c = std::cosh(y);
    return 1.0 / (c * c);
  };
  auto f = [&](double y) { return std::pow(y + t, n) * sech2(y); };
  // Split at the peak so each half is monotone in the exponential factor.
  QuadratureSpec half_spec = spec;
  half_spec.abs_tol = spec.abs_tol / 2.0;
  const double left = integrate_adaptive(f, -L, 0.0, half_spec).value.real();
  const double right = integrate_adaptive(f, 0.0, L, half_spec).value.real();
  return left + right;
}

}  // namespace polylog
