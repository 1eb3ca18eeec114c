#pragma once

// Exact rationals over 128-bit integers, always in lowest terms with a
// positive denominator. Arithmetic that would overflow throws OverflowError.

#include <compare>
#include <cstdint>
#include <string>

namespace polylog {

class Rational {
 public:
  __extension__ using Int = __int128;

  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  double to_double() const noexcept;
  long double to_long_double() const noexcept;
  std::string to_string() const;

  bool is_zero() const noexcept { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::string int128_to_string(Rational::Int v);

/// Binomial coefficient C(n, k) as an exact integer.
Rational::Int binomial(int n, int k);

}  // namespace polylog
