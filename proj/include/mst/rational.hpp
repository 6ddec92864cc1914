#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace mst {

/// Arbitrary-precision integer used for every subtree count and total.
using BigInt = mpz_class;

BigInt to_big(std::uint64_t value);
std::string to_string(const BigInt& value);

/// Exact fraction in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(const BigInt& value);  // NOLINT: integers promote implicitly
  Rational(long value);           // NOLINT
  template <class T, class U>
  Rational(const __gmp_expr<T, U>& expr) : Rational(BigInt(expr)) {}  // NOLINT: integer expressions
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }

  /// "p/q", always with an explicit denominator.
  std::string str() const;
  /// Display-only decimal with the given number of significant digits.
  std::string decimal(int significant_digits = 12) const;
  double approx() const { return value_.get_d(); }

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_{0};
};

}  // namespace mst
