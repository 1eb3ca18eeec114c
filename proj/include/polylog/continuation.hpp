#pragma once

// Li_2, Li_3 and integer-order Li_n on the whole cut plane, built from the
// series kernel and the reflection, Landen and inversion identities.
//
// On the real ray z > 1 values are the limits from below (Im z -> 0-), so
//   Li_2(x) has imaginary part -pi ln x and Li_3(x) has -pi/2 ln^2 x.

#include "polylog/complex.hpp"
#include "polylog/eval_result.hpp"
#include "polylog/quadrature.hpp"

namespace polylog {

/// Dilogarithm. Dispatch: series for |z| <= 0.75; inversion on z > 1;
/// Landen z -> z/(z-1) for Re z <= 0; reflection z -> 1-z (followed by
/// Landen when 1-z is still large) for Re z > 0. The few points that no
/// two-step chain brings inside the disk, around e^{+-i pi/3}, go to the
/// integral representation.
EvalResult li2(Complex z);

/// Trilogarithm. Series for |z| <= 0.75, closed forms and two-step Landen /
/// inversion / duplication chains on the real axis, the double integral
/// everywhere else.
EvalResult li3(Complex z, const QuadratureSpec& spec = kDoubleIntegralSpec);

/// Li_n(z) for n >= 1. n = 1, 2, 3 use the closed log, li2, li3; n >= 4
/// uses the series, the expansion in log z near the unit circle, or the
/// inversion z -> 1/z with its Bernoulli polynomial closure for |z| >= 4/3.
EvalResult li_n(int n, Complex z);

/// Li_3(1 - t) as
///   zeta(3) + log^3(1-t)/6 + pi^2/6 log(1-t) - 1/2 log^2(1-t) log t
///     - Li_3(t) - Li_3(-t/(1-t)),
/// with principal logs, for real t in [-1, 1), t != 0. At t = -1 this is
/// the continuation giving Li_3(2).
EvalResult li3_one_minus_via_landen(double t);

}  // namespace polylog
