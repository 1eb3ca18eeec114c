#include "polylog/rational.hpp"

#include <algorithm>
#include <utility>

#include "polylog/errors.hpp"

namespace polylog {
namespace {

using Int = Rational::Int;

Int abs128(Int v) { return v < 0 ? -v : v; }

Int gcd128(Int a, Int b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Int mul_checked(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("rational: 128-bit multiplication overflow");
  }
  return r;
}

Int add_checked(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("rational: 128-bit addition overflow");
  }
  return r;
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) {
    throw DomainError("rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = gcd128(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational operator+(const Rational& a, const Rational& b) {
  const Int g = gcd128(a.den_, b.den_);
  const Int ad = a.den_ / g;
  const Int bd = b.den_ / g;
  const Int num = add_checked(mul_checked(a.num_, bd), mul_checked(b.num_, ad));
  return Rational(num, mul_checked(ad, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-cancel first to keep intermediates small.
  const Int g1 = gcd128(a.num_, b.den_);
  const Int g2 = gcd128(b.num_, a.den_);
  const Int n1 = g1 > 1 ? a.num_ / g1 : a.num_;
  const Int d2 = g1 > 1 ? b.den_ / g1 : b.den_;
  const Int n2 = g2 > 1 ? b.num_ / g2 : b.num_;
  const Int d1 = g2 > 1 ? a.den_ / g2 : a.den_;
  return Rational(mul_checked(n1, n2), mul_checked(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw DomainError("rational: division by zero");
  }
  return a * Rational(b.den_, b.num_);
}

long double Rational::to_long_double() const noexcept {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

double Rational::to_double() const noexcept {
  return static_cast<double>(to_long_double());
}

std::string int128_to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string digits;
  // Work with negative values so the minimum Int does not overflow.
  if (!neg) v = -v;
  while (v != 0) {
    const int d = static_cast<int>(-(v % 10));
    digits.push_back(static_cast<char>('0' + d));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = mul_checked(r, n - k + i) / i;
  }
  return r;
}

}  // namespace polylog
