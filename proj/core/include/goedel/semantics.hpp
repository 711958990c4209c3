#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <variant>

#include "goedel/formula.hpp"
#include "goedel/truth_interval.hpp"

namespace goedel {

/// Total assignment of atoms to truth values: listed atoms take their
/// entry, all others take `fallback`.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(UnitRational fallback) : fallback_(std::move(fallback)) {}

  void set(AtomId atom, UnitRational value) { assignments_[atom] = std::move(value); }
  void set_default(UnitRational value) { fallback_ = std::move(value); }

  const UnitRational& operator()(AtomId atom) const;
  const UnitRational& fallback() const { return fallback_; }
  const std::map<AtomId, UnitRational>& assignments() const { return assignments_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<AtomId, UnitRational> assignments_;
  UnitRational fallback_;
};

/// Number of stream elements examined per infinitary connective.
struct EvalConfig {
  std::size_t depth = 1;

  /// Throws std::invalid_argument for depth 0.
  explicit EvalConfig(std::size_t depth);
};

/// Pointwise Goedel implication: 1 when a <= b, else b.
Rational implies_value(const Rational& a, const Rational& b);

/// Enclosure of {a -> b : a in lhs, b in rhs}.
TruthInterval implies_interval(const TruthInterval& lhs, const TruthInterval& rhs);

/// Truncated interval evaluation. When the convergence hints of all streams
/// are truthful, the exact value lies inside the result; finite formulas
/// evaluate to a point.
TruthInterval eval(const Formula& phi, const Valuation& valuation, const EvalConfig& cfg);

/// Exact value of a finite formula. Throws std::invalid_argument on streams
/// and real constants.
UnitRational eval_exact(const Formula& phi, const Valuation& valuation);

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t sample_count = 1000;
  /// Upper bound on boundary-grid valuations tried before random sampling.
  std::size_t grid_limit = 1u << 16;
};

enum class SampleSource { Grid, Random };

struct NoCounterexampleFound {
  std::size_t samples = 0;
};

/// A valuation under which the claim certainly fails.
class Counterexample {
 public:
  /// Throws std::invalid_argument unless interval.hi() < 1.
  Counterexample(Valuation valuation, TruthInterval interval, SampleSource source,
                 std::size_t sample_index);

  const Valuation& valuation() const { return valuation_; }
  const TruthInterval& interval() const { return interval_; }
  SampleSource source() const { return source_; }
  std::size_t sample_index() const { return sample_index_; }

 private:
  Valuation valuation_;
  TruthInterval interval_;
  SampleSource source_;
  std::size_t sample_index_;
};

using Verdict = std::variant<NoCounterexampleFound, Counterexample>;

inline bool refuted(const Verdict& v) { return std::holds_alternative<Counterexample>(v); }

/// Searches for a valuation with eval(phi).hi() < 1: first over the
/// boundary grid, then over seeded random rational valuations. One-sided:
/// finding nothing does not establish validity.
Verdict check_tautology(const Formula& phi, const EvalConfig& cfg, const SamplerConfig& sampler);

/// Searches for a valuation where min over premises of lo exceeds hi of
/// eval(conclusion).
Verdict check_entailment(std::span<const Formula> premises, const Formula& conclusion,
                         const EvalConfig& cfg, const SamplerConfig& sampler);

/// Random valuation number `index` of the seeded sequence. Denominators are
/// drawn uniformly from 1..64, then numerators uniformly from 0..den.
/// Listed atoms get independent values; the default is drawn last.
Valuation random_valuation(std::uint64_t seed, std::size_t index, std::span<const AtomId> atoms);

/// Boundary values for grid search: 0, 1, the given constants and the
/// midpoints of adjacent values, sorted and deduplicated.
std::vector<Rational> boundary_values(std::span<const Rational> constants);

}  // namespace goedel
