#pragma once

// Bernoulli numbers and polynomials with exact rational coefficients,
//   t e^{xt} / (e^t - 1) = sum_n B_n(x) t^n / n!,   B_1 = -1/2,
// and the partial sums of their Fourier expansions on [0, 1].

#include <cstdint>
#include <vector>

#include "polylog/complex.hpp"
#include "polylog/rational.hpp"

namespace polylog {

/// Largest degree served by the cached tables.
inline constexpr int kMaxBernoulliDegree = 40;

/// B_0 .. B_{n_max} from sum_{k=0}^{n} C(n+1,k) B_k = 0. Throws
/// OverflowError if the 128-bit rationals overflow.
std::vector<Rational> bernoulli_numbers(int n_max);

/// Cached B_k for k <= kMaxBernoulliDegree.
const Rational& bernoulli_number(int k);

struct BernoulliPoly {
  int degree = 0;
  std::vector<Rational> coeffs;  ///< coeffs[k] multiplies x^k

  /// Horner evaluation in binary64.
  Complex eval(Complex x) const;
  /// Exact evaluation at a rational point.
  Rational eval_exact(const Rational& x) const;
};

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}, for 0 <= n <= kMaxBernoulliDegree.
const BernoulliPoly& bernoulli_poly(int n);

/// Coefficients of y -> B_n(1/2 + y). Only powers y^j with j = n mod 2
/// are nonzero, since B_k(1/2) = (2^{1-k} - 1) B_k vanishes for odd k.
const BernoulliPoly& bernoulli_poly_about_half(int n);

/// B_n(x) at complex x.
Complex bernoulli_eval(int n, Complex x);

/// Coefficients of x -> p(1 - x), exact.
BernoulliPoly reflect_argument(const BernoulliPoly& p);

enum class Parity { even, odd };

/// Partial Fourier sum on t in [0, 1]:
///   even: (-1)^{p+1} (2p)!  / (2^{2p-1} pi^{2p})   sum_{n<=N} cos(2 pi n t)/n^{2p}  ->  B_{2p}(t)
///   odd:  (-1)^{p+1} (2p+1)!/ (2^{2p}   pi^{2p+1}) sum_{n<=N} sin(2 pi n t)/n^{2p+1} ->  B_{2p+1}(t)
double fourier_bernoulli_partial(int p, double t, Parity parity, std::int64_t n_terms);

/// (2p)! or (2p+1)! as a double, i.e. k!.
double factorial(int k);

}  // namespace polylog
