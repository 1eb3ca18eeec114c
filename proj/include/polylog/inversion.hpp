#pragma once

// The inversion identity closed by Bernoulli polynomials. With
// s = 1/2 + log(-x) / (2 pi i), i.e. s = log(x) / (2 pi i) taken with
// Arg x in [0, 2 pi),
//   Li_{2p}(x)   + Li_{2p}(1/x)   = (-1)^{p+1} (2 pi)^{2p}   / (2p)!   B_{2p}(s)
//   Li_{2p+1}(x) - Li_{2p+1}(1/x) = (-1)^{p+1} (2 pi)^{2p+1} i / (2p+1)! B_{2p+1}(s)

#include "polylog/bernoulli.hpp"
#include "polylog/complex.hpp"
#include "polylog/rational.hpp"

namespace polylog {

/// Order 2p (even) or 2p + 1 (odd).
int inversion_order(int p, Parity parity);

/// The polylogarithm side Li_n(x) +- Li_n(1/x).
Complex inversion_lhs(int p, Parity parity, Complex x);

/// The Bernoulli side. Throws DomainError for x = 0 or p < 1.
Complex inversion_rhs(int p, Parity parity, Complex x);

/// |lhs - rhs|.
double inversion_residual(int p, Parity parity, Complex x);

/// The uncorrected closure -2 pi i / n! B_n(log(x) / (2 pi i)) for
/// Li_n(x) + (-1)^n Li_n(1/x), principal log.
Complex inversion_rhs_naive(int n, Complex x);

/// |Li_n(x) + (-1)^n Li_n(1/x) - inversion_rhs_naive(n, x)|.
double inversion_residual_naive(int n, Complex x);

/// Exact r with zeta(2p) = r pi^{2p}, read off the even identity at x = 1:
///   r = (-1)^{p+1} 2^{2p-1} B_{2p} / (2p)!.
Rational zeta_even_over_pi_power(int p);

}  // namespace polylog
