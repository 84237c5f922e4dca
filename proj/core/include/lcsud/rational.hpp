#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lcsud {

/// Exact rational number with canonical form: reduced, denominator > 0.
/// Intermediate products use 128-bit arithmetic; values that do not fit in
/// 64 bits after reduction throw std::overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    *this = normalize(numerator, denominator);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return normalize(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return normalize(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return normalize(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return normalize(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_integer() const { return den_ == 1; }

  /// Renders "num/den", or just "num" for integers.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  static Rational normalize(i128 numerator, i128 denominator) {
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    if (numerator == 0) {
      Rational r;
      r.num_ = 0;
      r.den_ = 1;
      return r;
    }
    i128 a = numerator < 0 ? -numerator : numerator;
    i128 g = gcd128(a, denominator);
    numerator /= g;
    denominator /= g;
    constexpr i128 kMax = INT64_MAX;
    if (numerator > kMax || numerator < -kMax || denominator > kMax) {
      throw std::overflow_error("rational overflows 64-bit representation");
    }
    Rational r;
    r.num_ = static_cast<long long>(numerator);
    r.den_ = static_cast<long long>(denominator);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace lcsud
