#include "polylog/complex.hpp"

#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <numbers>

namespace polylog {

double principal_arg(double x, double y) {
  if (x == 0.0 && y == 0.0) {
    throw DomainError("principal_arg: argument of zero is undefined");
  }
  if (y == 0.0) {
    // Covers y = -0.0: the cut itself carries +pi.
    return x > 0.0 ? 0.0 : std::numbers::pi;
  }
  const double r = std::hypot(x, y);
  if (x > 0.0) {
    return 2.0 * std::atan(y / (x + r));
  }
  // Same half-angle tangent, rationalized: y/(x + r) = (r - x)/y. The
  // direct quotient cancels catastrophically for x < 0 and small |y|.
  return 2.0 * std::atan((r - x) / y);
}

Complex principal_log(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    throw DomainError("principal_log: log(0) is undefined");
  }
  return {std::log(std::abs(z)), principal_arg(z.real(), z.imag())};
}

Complex principal_log1p(Complex w) {
  const double a = 1.0 + w.real();
  const double b = w.imag();
  if (a == 0.0 && b == 0.0) {
    throw DomainError("principal_log1p: log(0) is undefined");
  }
  double re;
  if (std::abs(w) < 0.5) {
    re = 0.5 * std::log1p(w.real() * (2.0 + w.real()) + b * b);
  } else {
    re = std::log(std::hypot(a, b));
  }
  return {re, principal_arg(a, b)};
}

Complex cadd(Complex a, Complex b) { return a + b; }
Complex csub(Complex a, Complex b) { return a - b; }

Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

Complex cdiv(Complex a, Complex b) {
  if (b == Complex{0.0, 0.0}) {
    throw DomainError("cdiv: division by zero");
  }
  // Smith's algorithm.
  if (std::abs(b.real()) >= std::abs(b.imag())) {
    const double r = b.imag() / b.real();
    const double d = b.real() + b.imag() * r;
    return {(a.real() + a.imag() * r) / d, (a.imag() - a.real() * r) / d};
  }
  const double r = b.real() / b.imag();
  const double d = b.real() * r + b.imag();
  return {(a.real() * r + a.imag()) / d, (a.imag() * r - a.real()) / d};
}

Complex cpow_int(Complex z, std::int64_t n) {
  if (n < 0) {
    return cdiv(Complex{1.0, 0.0}, cpow_int(z, -n));
  }
  Complex result{1.0, 0.0};
  Complex base = z;
  while (n > 0) {
    if (n & 1) result = cmul(result, base);
    n >>= 1;
    if (n > 0) base = cmul(base, base);
  }
  return result;
}

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw DomainError(std::string(what) + ": non-finite value");
  }
}

std::string format_complex(Complex z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

std::optional<Complex> parse_complex_literal(std::string_view text) {
  auto parse_real = [](std::string_view s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    const std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  // A bare sign or empty coefficient in front of i means 1.
  auto parse_imag = [&](std::string_view s) -> std::optional<double> {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };

  if (text.empty()) return std::nullopt;
  if (const auto comma = text.find(','); comma != std::string_view::npos) {
    const auto a = parse_real(text.substr(0, comma));
    const auto b = parse_real(text.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    return Complex{*a, *b};
  }
  if (text.back() != 'i') {
    const auto a = parse_real(text);
    if (!a) return std::nullopt;
    return Complex{*a, 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto b = parse_imag(body);
    if (!b) return std::nullopt;
    return Complex{0.0, *b};
  }
  const auto a = parse_real(body.substr(0, split));
  const auto b = parse_imag(body.substr(split));
  if (!a || !b) return std::nullopt;
  return Complex{*a, *b};
}

}  // namespace polylog
