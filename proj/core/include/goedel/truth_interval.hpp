#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>

#include "goedel/rational.hpp"

namespace goedel {

/// Exact enclosure [lo, hi] of a truth value, 0 <= lo <= hi <= 1.
class TruthInterval {
 public:
  TruthInterval() = default;
  /// Throws std::invalid_argument unless 0 <= lo <= hi <= 1.
  TruthInterval(Rational lo, Rational hi);

  static TruthInterval point(const Rational& value) { return {value, value}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& value) const { return lo_ <= value && value <= hi_; }
  bool contains(const TruthInterval& inner) const {
    return lo_ <= inner.lo_ && inner.hi_ <= hi_;
  }
  bool intersects(const TruthInterval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  friend bool operator==(const TruthInterval&, const TruthInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

std::ostream& operator<<(std::ostream& os, const TruthInterval& interval);

enum class HintKind { None, MonotoneUp, MonotoneDown };

/// Certified convergence information attached to a formula stream.
///
/// `width_at(n)` bounds the distance between the extremum of the first n
/// element values and the true sup (MonotoneUp) or inf (MonotoneDown) of the
/// whole stream. It must be nonincreasing in n.
struct ConvergenceHint {
  HintKind kind = HintKind::None;
  std::function<Rational(std::size_t)> width_at;

  static ConvergenceHint none() { return {}; }

  /// width_at(n) = ratio^(n-1) for n >= 1, and 1 for n = 0.
  static ConvergenceHint geometric(HintKind kind, const Rational& ratio);

  /// Geometric with ratio 1/10; matches decimal truncation sequences.
  static ConvergenceHint decimal(HintKind kind) {
    return geometric(kind, Rational(1, 10));
  }
};

}  // namespace goedel
