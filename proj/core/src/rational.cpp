#include "goedel/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "goedel/error.hpp"

namespace goedel {

namespace {

BigInt pow10(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 0; i < n; ++i) result *= 10;
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_decimal_digits(std::string_view digits) {
  if (!all_digits(digits)) throw std::invalid_argument("expected decimal digits");
  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

ParseError::ParseError(const std::string& message, std::size_t column, std::size_t line)
    : Error(message), column_(column), line_(line) {}

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  if (denominator < 0) value_ = Value(-numerator, -denominator);
  else value_ = Value(numerator, denominator);
}

Rational Rational::pow10_inverse(std::size_t n) {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> t;
    for (std::size_t i = 0; i < 64; ++i) t.push_back(Rational(BigInt(1), pow10(i)));
    return t;
  }();
  return n < table.size() ? table[n] : Rational(BigInt(1), pow10(n));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    result = Rational(parse_decimal_digits(num), parse_decimal_digits(den));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    BigInt scaled = parse_decimal_digits(std::string(whole) + std::string(frac));
    result = Rational(scaled, pow10(frac.size()));
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    result = Rational(parse_decimal_digits(s), BigInt(1));
  }
  return negative ? -result : result;
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_ == 0; }
bool Rational::is_integer() const { return denominator() == 1; }

Rational Rational::operator-() const { return Rational(Value(-value_)); }
Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  const auto& ra = a.value_.backend().data();
  const auto& rb = b.value_.backend().data();
  const auto& an = ra.numerator();
  const auto& ad = ra.denominator();
  const auto& bn = rb.numerator();
  const auto& bd = rb.denominator();
  int c;
  if (ad == bd) {
    c = an.compare(bn);
  } else {
    const int sa = an.sign(), sb = bn.sign();
    if (sa != sb) c = sa < sb ? -1 : 1;
    else c = BigInt(an * bd).compare(BigInt(bn * ad));
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal(std::size_t places) const {
  BigInt num = numerator();
  const BigInt den = denominator();
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt whole = num / den;
  BigInt frac = ((num % den) * pow10(places)) / den;
  std::string out = negative && !(whole == 0 && frac == 0) ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += '.';
    out.append(places - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

UnitRational::UnitRational(Rational value) : value_(std::move(value)) {
  if (value_ < Rational(0) || Rational(1) < value_)
    throw std::out_of_range("truth value " + value_.to_string() + " outside [0,1]");
}

UnitRational UnitRational::one() { return UnitRational(Rational(1)); }

}  // namespace goedel

std::size_t std::hash<goedel::Rational>::operator()(const goedel::Rational& q) const noexcept {
  return std::hash<std::string>{}(q.to_string());
}
