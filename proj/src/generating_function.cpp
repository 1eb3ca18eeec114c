#include "polylog/generating_function.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "polylog/continuation.hpp"
#include "polylog/series.hpp"

namespace polylog {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Real linear combination of closed terms and evaluated sub-results.
struct RealAssembly {
  double value = 0.0;
  double magnitude = 0.0;
  double err = 0.0;
  std::int64_t work = 0;

  void add(double term) {
    value += term;
    magnitude += std::abs(term);
  }
  void add(const EvalResult& r, double factor) {
    add(factor * r.value.real());
    err += std::abs(factor) * r.err_estimate;
    work += r.terms_or_evals;
  }
  EvalResult finish(Method m) const {
    return {Complex{value, 0.0}, err + 8.0 * kEps * magnitude, work, m};
  }
};

EvalResult exact(double v) { return {Complex{v, 0.0}, 0.0, 0, Method::closed_form}; }

}  // namespace

EvalResult harmonic_gf_ramanujan(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("harmonic_gf_ramanujan: requires t in [0, 1]");
  if (t == 0.0) return exact(0.0);
  if (t == 1.0) return exact(zeta_int(3));
  const double l1 = std::log1p(-t);
  const double u = 1.0 - t;
  RealAssembly a;
  a.add(0.5 * std::log(t) * l1 * l1);
  a.add(li2(Complex{u, 0.0}), l1);
  a.add(li3(Complex{u, 0.0}), -1.0);
  a.add(zeta_int(3));
  return a.finish(Method::reflection);
}

EvalResult harmonic_gf_alternating(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("harmonic_gf_alternating: requires t in [0, 1]");
  if (t == 0.0) return exact(0.0);
  const double l1 = std::log1p(t);
  const Complex u{1.0 / (1.0 + t), 0.0};
  RealAssembly a;
  a.add(0.5 * std::log(t) * l1 * l1);
  a.add(-l1 * l1 * l1 / 3.0);
  a.add(li2(u), -l1);
  a.add(li3(u), -1.0);
  a.add(zeta_int(3));
  return a.finish(Method::landen);
}

EvalResult harmonic_gf_unified(double t) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("harmonic_gf_unified: requires t in [-1, 1]");
  if (t == 0.0) return exact(0.0);
  if (t == 1.0) return exact(zeta_int(3));
  const double l1 = std::log1p(-t);
  RealAssembly a;
  if (t < 0.5) {
    a.add(li3(Complex{-t / (1.0 - t), 0.0}), 1.0);
    a.add(-l1 * l1 * l1 / 6.0);
    a.add(li2(Complex{t, 0.0}), -l1);
    a.add(li3(Complex{t, 0.0}), 1.0);
    return a.finish(Method::landen);
  }
  const EvalResult l2 = li2(Complex{t, 0.0});
  a.add(zeta_int(3));
  a.add(li3(Complex{1.0 - t, 0.0}), -1.0);
  a.add(-0.5 * std::log(t) * l1 * l1);
  a.add((std::numbers::pi * std::numbers::pi / 6.0 - l2.value.real()) * l1);
  a.err += std::abs(l1) * l2.err_estimate;
  a.work += l2.terms_or_evals;
  return a.finish(Method::landen);
}

}  // namespace polylog
