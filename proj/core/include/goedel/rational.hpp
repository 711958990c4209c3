#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace goedel {

using BigInt = boost::multiprecision::cpp_int;

/// Parses a string of decimal digits; leading zeros are not an octal prefix.
BigInt parse_decimal_digits(std::string_view digits);

/// Exact fraction in canonical form: denominator positive, gcd(|num|, den) = 1.
/// Equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// 10^-n.
  static Rational pow10_inverse(std::size_t n);

  /// Accepts "a/b", "a" or a decimal literal "d.ddd" (optionally signed).
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  bool is_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Always "num/den", e.g. "0/1", "1/3".
  std::string to_string() const;

  /// Decimal rendering truncated toward zero after `places` fractional digits.
  std::string to_decimal(std::size_t places) const;

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}

  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// A rational in [0, 1]; the carrier of truth values.
class UnitRational {
 public:
  UnitRational() = default;
  /// Throws std::out_of_range when `value` lies outside [0, 1].
  explicit UnitRational(Rational value);

  static UnitRational zero() { return UnitRational(); }
  static UnitRational one();

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const UnitRational&, const UnitRational&) = default;
  friend std::strong_ordering operator<=>(const UnitRational& a, const UnitRational& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

}  // namespace goedel

template <>
struct std::hash<goedel::Rational> {
  std::size_t operator()(const goedel::Rational& q) const noexcept;
};
