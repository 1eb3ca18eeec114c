#pragma once

// Closed forms of the harmonic generating function
//   F(t) = sum_{n>=1} H_n t^{n+1} / (n+1)^2 = int_0^t log^2(1-x) / (2x) dx
// on the real interval, each built from li2 / li3.

#include "polylog/eval_result.hpp"

namespace polylog {

/// F(t) = 1/2 log t log^2(1-t) + log(1-t) Li2(1-t) - Li3(1-t) + zeta(3)
/// for t in [0, 1]; the endpoints take the limits F(0) = 0, F(1) = zeta(3).
EvalResult harmonic_gf_ramanujan(double t);

/// sum_{n>=1} (-1)^{n+1} H_n t^{n+1} / (n+1)^2 for t in [0, 1], from
///   1/2 log t log^2(1+t) - 1/3 log^3(1+t) - log(1+t) Li2(1/(1+t))
///     - Li3(1/(1+t)) + zeta(3).
/// The series on the left is F(-t), so this equals harmonic_gf_unified(-t).
EvalResult harmonic_gf_alternating(double t);

/// F(t) for t in [-1, 1] by one formula,
///   Li3(-t/(1-t)) - 1/6 log^3(1-t) - log(1-t) Li2(t) + Li3(t).
/// For t >= 1/2, where -t/(1-t) <= -1, the first term is expanded with the
/// trilogarithm Landen identity and the log^3 and Li3(t) terms cancel:
///   F(t) = zeta(3) - Li3(1-t) - 1/2 log t log^2(1-t) + (pi^2/6 - Li2(t)) log(1-t).
/// F(1) = zeta(3).
EvalResult harmonic_gf_unified(double t);

}  // namespace polylog
