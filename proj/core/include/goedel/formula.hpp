#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goedel/digit_stream.hpp"
#include "goedel/rational.hpp"
#include "goedel/truth_interval.hpp"

namespace goedel {

using AtomId = std::uint64_t;

enum class Connective {
  Bottom,
  Atom,
  Implies,
  Conj,
  CountConj,
  CountDisj,
  RatConst,
  RealConst,
};

class FormulaStream;

/// Immutable formula of the infinitary Goedel language with rational and
/// real constants. Copies share structure.
///
/// Only the primitive connectives are represented; negation, top,
/// biconditional and binary disjunction are expanded by the constructors
/// below. Rational constants 0 and 1 normalize to Bottom and Top.
class Formula {
 public:
  /// Bottom.
  Formula();

  Connective kind() const;

  /// Accessors; each throws std::logic_error when called on the wrong kind.
  AtomId atom() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const FormulaStream& stream() const;
  const UnitRational& constant() const;
  const DigitStream& digits() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend Formula bottom();
  friend Formula atom(AtomId id);
  friend Formula implies(Formula lhs, Formula rhs);
  friend Formula conj(Formula lhs, Formula rhs);
  friend Formula count_conj(FormulaStream stream);
  friend Formula count_disj(FormulaStream stream);
  friend Formula rat_const(const UnitRational& q);
  friend Formula real_const(DigitStream d);
};

Formula bottom();
Formula atom(AtomId id);
Formula implies(Formula lhs, Formula rhs);
Formula conj(Formula lhs, Formula rhs);
Formula count_conj(FormulaStream stream);
Formula count_disj(FormulaStream stream);
/// Normalizes 0 to bottom() and 1 to top().
Formula rat_const(const UnitRational& q);
Formula real_const(DigitStream d);

// Derived connectives, expanded eagerly into primitives.
Formula neg(Formula phi);
Formula top();
Formula iff(Formula phi, Formula psi);
/// ((phi -> psi) -> psi) & ((psi -> phi) -> phi)
Formula lor(Formula phi, Formula psi);

/// Countable sequence i -> formula_i, generated lazily and memoized.
///
/// The name (when non-empty) is the registry handle used by the printer.
/// `q_tier` is a constructor guarantee that no element contains a real
/// constant; the translation passes such streams through unchanged.
class FormulaStream {
 public:
  using Generator = std::function<Formula(std::size_t)>;

  explicit FormulaStream(Generator generate, ConvergenceHint hint = {},
                         std::string name = {}, bool q_tier = false);

  /// Element i. Deterministic; thread safe.
  Formula at(std::size_t i) const;

  const ConvergenceHint& hint() const;
  const std::string& name() const { return name_; }
  bool named() const { return !name_.empty(); }
  bool q_tier() const;

  FormulaStream with_name(std::string name) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
  std::string name_;
};

/// Preorder enumeration of the finite unfolding in which every stream
/// contributes its first n elements.
std::vector<Formula> subformulas_to_depth(const Formula& phi, std::size_t n);

/// AST equality where streams are compared on elements 0..n-1 and real
/// constants on digits 1..n.
bool structural_eq_to_depth(const Formula& phi, const Formula& psi, std::size_t n);

/// True when no real constant occurs in the depth-n unfolding.
bool is_q_tier(const Formula& phi, std::size_t n);

/// Atoms and constants occurring in the depth-n unfolding. A real constant
/// contributes both endpoints of its depth-n truncation bracket.
std::set<AtomId> atoms_to_depth(const Formula& phi, std::size_t n);
std::vector<Rational> constants_to_depth(const Formula& phi, std::size_t n);

/// True for formulas without streams or real constants.
bool is_finite(const Formula& phi);

/// Number of nodes of a finite formula (streams count as one node).
std::size_t node_count(const Formula& phi);

}  // namespace goedel
