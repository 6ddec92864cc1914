#include "mst/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace mst {

BigInt to_big(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(long value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
  // mpf keeps the approximation meaningful when numerator and denominator
  // both overflow a double.
  mpf_class f(value_, 256);
  mp_exp_t exponent = 0;
  std::string digits = f.get_str(exponent, 10, static_cast<std::size_t>(significant_digits));
  if (digits.empty() || digits == "0") return "0";
  bool negative = digits[0] == '-';
  if (negative) digits.erase(0, 1);
  std::string out = negative ? "-" : "";
  if (exponent <= 0) {
    out += "0." + std::string(static_cast<std::size_t>(-exponent), '0') + digits;
  } else if (static_cast<std::size_t>(exponent) >= digits.size()) {
    out += digits + std::string(static_cast<std::size_t>(exponent) - digits.size(), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(exponent)) + "." +
           digits.substr(static_cast<std::size_t>(exponent));
  }
  return out;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace mst
