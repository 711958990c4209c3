#include "goedel/digit_stream.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "goedel/error.hpp"

namespace goedel {

namespace {

BigInt pow10(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 0; i < n; ++i) result *= 10;
  return result;
}

bool is_perfect_square(const BigInt& x) {
  BigInt root = boost::multiprecision::sqrt(x);
  return root * root == x;
}

// Digits of sqrt(p/q) in blocks: floor(sqrt(p/q) * 10^k) = isqrt(floor(p * 10^2k / q)).
class SqrtSource final : public DigitSource {
 public:
  SqrtSource(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {}

  std::uint8_t digit(std::size_t i) const override {
    std::lock_guard lock(mutex_);
    if (i > digits_.size()) extend(std::max({i, 2 * digits_.size(), std::size_t{64}}));
    return static_cast<std::uint8_t>(digits_[i - 1] - '0');
  }

 private:
  void extend(std::size_t k) const {
    BigInt scaled = p_ * pow10(2 * k) / q_;
    std::string s = boost::multiprecision::sqrt(scaled).str();
    digits_.assign(k - s.size(), '0');
    digits_ += s;
  }

  BigInt p_;
  BigInt q_;
  mutable std::mutex mutex_;
  mutable std::string digits_;
};

class PeriodicSource final : public DigitSource {
 public:
  explicit PeriodicSource(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}
  std::uint8_t digit(std::size_t i) const override { return digits_[(i - 1) % digits_.size()]; }

 private:
  std::vector<std::uint8_t> digits_;
};

class FileSource final : public DigitSource {
 public:
  FileSource(std::string digits, std::string origin)
      : digits_(std::move(digits)), origin_(std::move(origin)) {}

  std::uint8_t digit(std::size_t i) const override {
    if (i > digits_.size())
      throw IoError("digit " + std::to_string(i) + " requested but " + origin_ + " holds only " +
                    std::to_string(digits_.size()) + " digits");
    return static_cast<std::uint8_t>(digits_[i - 1] - '0');
  }

 private:
  std::string digits_;
  std::string origin_;
};

class ComplementSource final : public DigitSource {
 public:
  explicit ComplementSource(DigitStream inner) : inner_(std::move(inner)) {}
  std::uint8_t digit(std::size_t i) const override {
    return static_cast<std::uint8_t>(9 - inner_.digit_at(i));
  }

 private:
  DigitStream inner_;
};

class FunctionSource final : public DigitSource {
 public:
  explicit FunctionSource(std::function<std::uint8_t(std::size_t)> fn) : fn_(std::move(fn)) {}

  std::uint8_t digit(std::size_t i) const override {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(i); it != memo_.end()) return it->second;
    }
    std::uint8_t d = fn_(i);
    if (d > 9) throw std::domain_error("digit generator returned " + std::to_string(d));
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(i, d).first->second;
  }

 private:
  std::function<std::uint8_t(std::size_t)> fn_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::uint8_t> memo_;
};

}  // namespace

DigitStream::DigitStream(std::string name, std::shared_ptr<const DigitSource> source,
                         bool known_irrational)
    : name_(std::move(name)), source_(std::move(source)), known_irrational_(known_irrational) {
  if (!source_) throw std::invalid_argument("digit stream without source");
}

std::uint8_t DigitStream::digit_at(std::size_t i) const {
  if (i == 0) throw std::out_of_range("digit indices start at 1");
  return source_->digit(i);
}

std::string DigitStream::prefix(std::size_t n) const {
  std::string out(n, '0');
  for (std::size_t i = 1; i <= n; ++i) out[i - 1] = static_cast<char>('0' + digit_at(i));
  return out;
}

DigitStream DigitStream::with_name(std::string name) const {
  DigitStream copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

UnitRational truncate(const DigitStream& d, std::size_t n) {
  if (n == 0) return UnitRational::zero();
  return UnitRational(Rational(parse_decimal_digits(d.prefix(n)), pow10(n)));
}

DigitStream complement(const DigitStream& d) {
  std::string name = d.named() ? "complement(" + d.name() + ")" : std::string{};
  return DigitStream(std::move(name), std::make_shared<ComplementSource>(d), d.known_irrational());
}

UnitRational upper_truncate(const DigitStream& d, std::size_t n) {
  return UnitRational(Rational(1) - truncate(complement(d), n).value());
}

DigitStream sqrt_stream(const Rational& radicand, std::string name) {
  if (radicand <= Rational(0) || radicand >= Rational(1))
    throw std::invalid_argument("sqrt_stream radicand " + radicand.to_string() +
                                " outside (0,1)");
  BigInt p = radicand.numerator();
  BigInt q = radicand.denominator();
  if (is_perfect_square(p) && is_perfect_square(q))
    throw std::invalid_argument("sqrt_stream radicand " + radicand.to_string() +
                                " is a rational square");
  return DigitStream(std::move(name), std::make_shared<SqrtSource>(std::move(p), std::move(q)),
                     true);
}

DigitStream periodic_stream(std::span<const std::uint8_t> digits, std::string name) {
  if (digits.empty()) throw std::invalid_argument("periodic_stream needs at least one digit");
  if (std::any_of(digits.begin(), digits.end(), [](std::uint8_t d) { return d > 9; }))
    throw std::invalid_argument("periodic_stream digits must lie in 0..9");
  return DigitStream(std::move(name),
                     std::make_shared<PeriodicSource>(
                         std::vector<std::uint8_t>(digits.begin(), digits.end())),
                     false);
}

DigitStream file_stream(const std::filesystem::path& path, std::string name,
                        bool known_irrational) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open digit file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read digit file " + path.string());
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ParseError(path.string() + ": non-digit byte at offset " + std::to_string(i + 1),
                       i + 1);
  }
  return DigitStream(std::move(name), std::make_shared<FileSource>(std::move(text), path.string()),
                     known_irrational);
}

DigitStream function_stream(std::function<std::uint8_t(std::size_t)> digit, std::string name,
                            bool known_irrational) {
  return DigitStream(std::move(name), std::make_shared<FunctionSource>(std::move(digit)),
                     known_irrational);
}

}  // namespace goedel
