#include "goedel/semantics.hpp"

#include <stdexcept>

namespace goedel {

const UnitRational& Valuation::operator()(AtomId atom) const {
  auto it = assignments_.find(atom);
  return it == assignments_.end() ? fallback_ : it->second;
}

EvalConfig::EvalConfig(std::size_t d) : depth(d) {
  if (depth == 0) throw std::invalid_argument("evaluation depth must be at least 1");
}

Rational implies_value(const Rational& a, const Rational& b) { return a <= b ? Rational(1) : b; }

TruthInterval implies_interval(const TruthInterval& lhs, const TruthInterval& rhs) {
  if (lhs.hi() <= rhs.lo()) return TruthInterval::point(Rational(1));
  if (lhs.lo() > rhs.hi()) return rhs;
  return {rhs.lo(), Rational(1)};
}

namespace {

// Enclosure bounds inside the evaluator. Every rule keeps 0 <= lo <= hi <= 1,
// so validation happens once when the result leaves eval().
struct Bounds {
  Rational lo;
  Rational hi;
};

Bounds eval_count_conj(const FormulaStream& s, const Valuation& v, std::size_t n);
Bounds eval_count_disj(const FormulaStream& s, const Valuation& v, std::size_t n);

Bounds implies_bounds(Bounds lhs, Bounds rhs) {
  if (lhs.hi <= rhs.lo) return {Rational(1), Rational(1)};
  if (lhs.lo > rhs.hi) return rhs;
  return {std::move(rhs.lo), Rational(1)};
}

Bounds eval_at(const Formula& phi, const Valuation& v, std::size_t n) {
  switch (phi.kind()) {
    case Connective::Bottom:
      return {Rational(0), Rational(0)};
    case Connective::Atom:
      return {v(phi.atom()), v(phi.atom())};
    case Connective::RatConst:
      return {phi.constant(), phi.constant()};
    case Connective::RealConst: {
      Rational lo = truncate(phi.digits(), n);
      Rational hi = lo + Rational::pow10_inverse(n);
      return {std::move(lo), std::move(hi)};
    }
    case Connective::Conj: {
      Bounds a = eval_at(phi.lhs(), v, n);
      Bounds b = eval_at(phi.rhs(), v, n);
      if (b.lo < a.lo) a.lo = std::move(b.lo);
      if (b.hi < a.hi) a.hi = std::move(b.hi);
      return a;
    }
    case Connective::Implies:
      return implies_bounds(eval_at(phi.lhs(), v, n), eval_at(phi.rhs(), v, n));
    case Connective::CountConj:
      return eval_count_conj(phi.stream(), v, n);
    case Connective::CountDisj:
      return eval_count_disj(phi.stream(), v, n);
  }
  throw std::logic_error("unhandled connective");
}

// inf over the stream lies below every examined element; a MonotoneDown
// hint bounds how far below the examined minimum it can be.
Bounds eval_count_conj(const FormulaStream& s, const Valuation& v, std::size_t n) {
  Bounds acc = eval_at(s.at(0), v, n);
  for (std::size_t i = 1; i < n; ++i) {
    Bounds e = eval_at(s.at(i), v, n);
    if (e.hi < acc.hi) acc.hi = std::move(e.hi);
    if (e.lo < acc.lo) acc.lo = std::move(e.lo);
  }
  if (s.hint().kind == HintKind::MonotoneDown)
    acc.lo = max(Rational(0), acc.lo - s.hint().width_at(n));
  else
    acc.lo = Rational(0);
  return acc;
}

Bounds eval_count_disj(const FormulaStream& s, const Valuation& v, std::size_t n) {
  Bounds acc = eval_at(s.at(0), v, n);
  for (std::size_t i = 1; i < n; ++i) {
    Bounds e = eval_at(s.at(i), v, n);
    if (e.lo > acc.lo) acc.lo = std::move(e.lo);
    if (e.hi > acc.hi) acc.hi = std::move(e.hi);
  }
  if (s.hint().kind == HintKind::MonotoneUp)
    acc.hi = min(Rational(1), acc.hi + s.hint().width_at(n));
  else
    acc.hi = Rational(1);
  return acc;
}

Rational exact_at(const Formula& phi, const Valuation& v) {
  switch (phi.kind()) {
    case Connective::Bottom:
      return Rational(0);
    case Connective::Atom:
      return v(phi.atom());
    case Connective::RatConst:
      return phi.constant();
    case Connective::Conj:
      return min(exact_at(phi.lhs(), v), exact_at(phi.rhs(), v));
    case Connective::Implies:
      return implies_value(exact_at(phi.lhs(), v), exact_at(phi.rhs(), v));
    case Connective::CountConj:
    case Connective::CountDisj:
    case Connective::RealConst:
      throw std::invalid_argument("eval_exact requires a finite formula");
  }
  throw std::logic_error("unhandled connective");
}

}  // namespace

TruthInterval eval(const Formula& phi, const Valuation& valuation, const EvalConfig& cfg) {
  if (cfg.depth == 0) throw std::invalid_argument("evaluation depth must be at least 1");
  Bounds b = eval_at(phi, valuation, cfg.depth);
  return {std::move(b.lo), std::move(b.hi)};
}

UnitRational eval_exact(const Formula& phi, const Valuation& valuation) {
  return UnitRational(exact_at(phi, valuation));
}

Counterexample::Counterexample(Valuation valuation, TruthInterval interval, SampleSource source,
                               std::size_t sample_index)
    : valuation_(std::move(valuation)),
      interval_(std::move(interval)),
      source_(source),
      sample_index_(sample_index) {
  if (!(interval_.hi() < Rational(1)))
    throw std::invalid_argument("counterexample interval must lie strictly below 1");
}

}  // namespace goedel
