#include "goedel/truth_interval.hpp"

#include <ostream>
#include <stdexcept>

namespace goedel {

TruthInterval::TruthInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  static const Rational zero(0), one(1);
  if (lo_ < zero || hi_ < lo_ || one < hi_)
    throw std::invalid_argument("invalid truth interval [" + lo_.to_string() + ", " +
                                hi_.to_string() + "]");
}

std::ostream& operator<<(std::ostream& os, const TruthInterval& interval) {
  return os << '[' << interval.lo() << ", " << interval.hi() << ']';
}

ConvergenceHint ConvergenceHint::geometric(HintKind kind, const Rational& ratio) {
  if (ratio < Rational(0) || Rational(1) < ratio)
    throw std::invalid_argument("geometric hint ratio must lie in [0,1]");
  return {kind, [num = ratio.numerator(), den = ratio.denominator()](std::size_t n) {
            if (n <= 1) return Rational(1);
            const auto e = static_cast<unsigned>(n - 1);
            return Rational(boost::multiprecision::pow(num, e), boost::multiprecision::pow(den, e));
          }};
}

}  // namespace goedel
