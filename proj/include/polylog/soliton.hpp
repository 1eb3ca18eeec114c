#pragma once

// Moments M_n(t) = int x^n sech^2(x - t) dx of the KdV soliton profile.

#include "polylog/bernoulli.hpp"

namespace polylog {

/// M_n(t) = 2 (-i)^n pi^n B_n(1/2 + i t / pi), n <= 40. Summed from the
/// expansion of B_n about 1/2, whose terms are all real here.
double soliton_moment_closed(int n, double t);

/// Two polylogarithmic forms of the even (n = 2p) and odd (n = 2p + 1)
/// moments.
enum class MomentForm {
  /// Obtained by putting s = 1/2 + i t / pi in the inversion identity:
  ///   M_{2p}   = -(2p)!/2^{2p-1} (Li_{2p}(-e^{-2t}) + Li_{2p}(-e^{2t}))
  ///   M_{2p+1} = (2p+1)!/2^{2p}  (Li_{2p+1}(-e^{-2t}) - Li_{2p+1}(-e^{2t}))
  real_exponent,
  /// The widely quoted form on the unit circle:
  ///   (-1)^{p+1}(2p)!/2^{2p-1} (Li_{2p}(-e^{-2it}) + Li_{2p}(-e^{2it}))
  ///   i(2p+1)!/2^{2p} (Li_{2p+1}(-e^{-2it}) - Li_{2p+1}(-e^{2it}))
  /// It gives -pi^2/6 for M_2(0) = pi^2/6.
  oscillatory,
};

/// Evaluates the chosen form; the real part for the oscillatory form.
double soliton_moment_polylog(int p, double t, Parity parity, MomentForm form);

}  // namespace polylog
