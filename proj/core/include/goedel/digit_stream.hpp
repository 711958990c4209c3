#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "goedel/rational.hpp"

namespace goedel {

/// Producer of decimal digits r_1 r_2 ... of a real in [0, 1].
///
/// Implementations must be deterministic and safe to query concurrently.
class DigitSource {
 public:
  virtual ~DigitSource() = default;
  /// Digit at 1-based index `i`.
  virtual std::uint8_t digit(std::size_t i) const = 0;
};

/// Value handle over a shared, immutable digit source.
///
/// `known_irrational` marks streams whose limit is certified irrational
/// (square roots of non-square rationals, registered digit files). Strict
/// bracketing r_n < r < r_n + 10^-n is only guaranteed for those.
class DigitStream {
 public:
  DigitStream(std::string name, std::shared_ptr<const DigitSource> source,
              bool known_irrational);

  /// Digit at 1-based index `i`. Throws std::out_of_range for i = 0.
  std::uint8_t digit_at(std::size_t i) const;

  /// First n digits as ASCII.
  std::string prefix(std::size_t n) const;

  const std::string& name() const { return name_; }
  bool named() const { return !name_.empty(); }
  bool known_irrational() const { return known_irrational_; }

  DigitStream with_name(std::string name) const;

 private:
  std::string name_;
  std::shared_ptr<const DigitSource> source_;
  bool known_irrational_;
};

/// sum_{i=1..n} digit_at(i) * 10^-i; zero when n = 0.
UnitRational truncate(const DigitStream& d, std::size_t n);

/// Digit-wise nines complement; represents 1 - r for non-terminating r.
DigitStream complement(const DigitStream& d);

/// 1 - truncate(complement(d), n), which equals truncate(d, n) + 10^-n.
UnitRational upper_truncate(const DigitStream& d, std::size_t n);

/// Decimal digits of sqrt(radicand) computed with exact integer square roots.
/// Throws std::invalid_argument unless 0 < radicand < 1 and radicand is not
/// the square of a rational.
DigitStream sqrt_stream(const Rational& radicand, std::string name = {});

/// Repeats `digits` forever. Throws std::invalid_argument on an empty list
/// or a value above 9.
DigitStream periodic_stream(std::span<const std::uint8_t> digits, std::string name = {});

/// Digits read from an ASCII file ('0'-'9', optional trailing newline).
/// Throws IoError when unreadable and ParseError on other bytes. Queries past
/// the end of the file throw IoError.
DigitStream file_stream(const std::filesystem::path& path, std::string name = {},
                        bool known_irrational = false);

/// Digits from a user-supplied generator. Results are memoized and checked
/// to be in 0..9 (std::domain_error otherwise).
DigitStream function_stream(std::function<std::uint8_t(std::size_t)> digit,
                            std::string name = {}, bool known_irrational = false);

}  // namespace goedel
