#pragma once

// Principal-branch complex primitives.
//
// Conventions: Arg(z) lies in (-pi, pi]; the negative real axis, including
// points carrying a signed zero imaginary part, has argument +pi, so that
// log(-1) = i*pi.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polylog/errors.hpp"

namespace polylog {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Principal argument of x + iy via the half-angle arctangent form
/// 2*atan(y / (x + |z|)), with Arg = pi on the negative real axis.
/// Throws DomainError at the origin.
double principal_arg(double x, double y);

/// ln|z| + i*Arg(z). Throws DomainError for z = 0.
Complex principal_log(Complex z);

/// log(1 + w), accurate for small |w|. Throws DomainError for w = -1.
Complex principal_log1p(Complex w);

Complex cadd(Complex a, Complex b);
Complex csub(Complex a, Complex b);
Complex cmul(Complex a, Complex b);
/// Throws DomainError when the divisor is zero.
Complex cdiv(Complex a, Complex b);
/// z^n by repeated squaring; negative n goes through the reciprocal.
Complex cpow_int(Complex z, std::int64_t n);

bool is_finite(Complex z) noexcept;

/// Throws DomainError naming `what` if either component is NaN or Inf.
void require_finite(Complex z, const char* what);

/// Parses "a", "a+bi", "a-bi", "bi" or "re,im" (no spaces). nullopt on
/// malformed or non-finite input.
std::optional<Complex> parse_complex_literal(std::string_view text);

/// Formats as "re" or "re+imi"/"re-imi" with 17 significant digits.
std::string format_complex(Complex z);

}  // namespace polylog
