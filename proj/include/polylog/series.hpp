#pragma once

// Power-series kernels: Li_p inside the disk |z| <= 0.75, harmonic numbers,
// zeta at integers, the Taylor series of the harmonic generating function
//   F(z) = sum_{n>=1} H_n z^{n+1} / (n+1)^2,
// and alternating-series acceleration.

#include <cstdint>
#include <functional>

#include "polylog/complex.hpp"
#include "polylog/eval_result.hpp"

namespace polylog {

/// Radius of the disk on which polylog_series is used for p >= 2.
inline constexpr double kSeriesRadius = 0.75;

struct SeriesParams {
  double tol = 1e-16;  ///< absolute tolerance on the summed value
  std::int64_t max_terms = 100000;

  void validate() const;
};

/// H_n summed in increasing order of 1/k; H_0 = 0.
double harmonic_number(std::int64_t n);

/// Partial sum of z^n/n^p. The stopping rule is the geometric tail bound
/// |z|^{N+1} / ((N+1)^p (1-|z|)) <= tol, reported as err_estimate.
/// Requires |z| <= kSeriesRadius for p >= 2 and |z| < 1 for p = 1.
EvalResult polylog_series(int p, Complex z, const SeriesParams& params = {});

/// zeta(p) for integer p >= 2: Euler's Bernoulli formula for even p, the
/// accelerated eta series for odd p.
double zeta_int(int p);

/// Catalan's constant sum_{k>=0} (-1)^k/(2k+1)^2.
double catalan_constant();

/// sum_{k>=0} (-1)^k a(k) by the Cohen-Rodriguez Villegas-Zagier
/// weights with n terms; relative error about 5.83^-n for totally
/// monotone a.
double alternating_sum_accelerated(const std::function<double(std::int64_t)>& a,
                                   int n);

/// Taylor series of F for |z| <= 1. On the unit circle the tail decays
/// like log(N)/N, except at z = -1 where the alternating bound applies;
/// expect ConvergenceError there for small tol.
EvalResult harmonic_gf_taylor(Complex z, const SeriesParams& params = {});

/// Raw partial sum sum_{n=1}^{N} (-1)^{n-1} H_n / n^2.
double hsum_alternating_n2_partial(std::int64_t n_terms);

/// Accelerated sum_{n>=1} (-1)^{n-1} H_n / n^2 (limit 5 zeta(3)/8).
/// err_estimate is the change between two acceleration orders.
EvalResult hsum_alternating_n2(const SeriesParams& params = {});

/// Li_n(e^mu) = sum_{k != n-1} zeta(n-k) mu^k/k!
///              + mu^{n-1}/(n-1)! (H_{n-1} - log(-mu)),  mu = log z,
/// convergent for |mu| < 2*pi. Used for n >= 4 in the annulus around the
/// unit circle. Requires n >= 2 and |log z| <= 4.
EvalResult polylog_log_series(int n, Complex z);

}  // namespace polylog
