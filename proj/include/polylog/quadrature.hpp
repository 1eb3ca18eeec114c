#pragma once

// Adaptive Gauss-Kronrod integration and the integral representations of
// the dilogarithm, trilogarithm and sech^2 moments built on it.

#include <functional>
#include <optional>

#include "polylog/complex.hpp"
#include "polylog/eval_result.hpp"

namespace polylog {

struct QuadratureSpec {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_subdivisions = 2000;

  void validate() const;
};

/// Default tolerance of the double integral. The inner integrals carry
/// rounding noise near 1e-14, so the outer rule cannot certify much below
/// 1e-12.
inline constexpr QuadratureSpec kDoubleIntegralSpec{1e-12, 1e-12, 2000};

/// Raised when max_subdivisions is exhausted; best() holds the estimate.
class ToleranceNotMet : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod on [a, b], bisecting the panel
/// with the largest error until the summed estimate is at most
/// max(abs_tol, rel_tol*|I|), or until it reaches the rounding floor
/// 50 eps int|f| when the tolerance lies below that. The integrand is never
/// evaluated at a or b.
/// Throws NonFiniteIntegrand, ToleranceNotMet.
EvalResult integrate_adaptive(const RealFunction& f, double a, double b,
                              const QuadratureSpec& spec = {});

/// Li2(-z) for z off the cut (-inf, -1]:
///   Re = -int_0^1 ln(1 + 2xt + t^2 |z|^2) / (2t) dt
///   Im = -int_0^1 Arg(1 + zt) / t dt,
/// with Arg from the half-angle formula, so the imaginary part stays correct
/// where 1 + zt leaves the right half-plane. Throws CutViolation.
EvalResult dilog_via_integral(Complex z, const QuadratureSpec& spec = {});

/// Same representation with z = r e^{i theta}. theta = +-pi with r >= 1 is
/// the cut.
EvalResult dilog_via_integral_polar(double r, double theta, const QuadratureSpec& spec = {});

/// Li2(w) with the imaginary part written as the plain arctangent
///   int_0^1 arctan(t r sin(theta) / (1 - t r cos(theta))) dt / t,
/// which only covers Arg in (-pi/2, pi/2). Wrong once Re w > 1; kept as a
/// reference for that failure.
EvalResult dilog_plain_arctan(Complex w, const QuadratureSpec& spec = {});

/// Li3(-z) as the iterated integral over the unit square
///   -int_0^1 int_0^1 log(1 + z x t) / (x t) dt dx,
/// inner tolerance one tenth of the outer. Throws CutViolation.
EvalResult trilog_via_double_integral(Complex z, const QuadratureSpec& spec = kDoubleIntegralSpec);

/// Im Li2(iy) = int_0^1 arctan(y t) / t dt, any real y.
double im_li2_imag_axis(double y, const QuadratureSpec& spec = {});

/// Im Li2(-x - ix) = int_0^1 (pi/4 - arctan(2xt + 1)) dt / t for sign = +1;
/// sign = -1 gives Im Li2(-x + ix), the negated value.
double im_li2_diagonal(double x, int sign, const QuadratureSpec& spec = {});

/// int x^n sech^2(x - t) dx over [t - L, t + L]. L defaults to 40 + n and
/// grows until the exponential tail estimate falls below abs_tol.
double sech2_moment_quadrature(int n, double t, const QuadratureSpec& spec = {},
                               std::optional<double> half_width = std::nullopt);

}  // namespace polylog
