#include "goedel/formula.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>
#include <variant>

namespace goedel {

struct Formula::Node {
  using Payload = std::variant<std::monostate, AtomId, std::pair<Formula, Formula>, FormulaStream,
                               UnitRational, DigitStream>;
  Connective kind;
  Payload payload;
};

namespace {

template <class T>
const T& payload_as(const auto& node, Connective expected, const char* what) {
  if (node.kind != expected) throw std::logic_error(std::string("formula is not ") + what);
  return std::get<T>(node.payload);
}

}  // namespace

Formula::Formula() : node_(bottom().node_) {}

Connective Formula::kind() const { return node_->kind; }

AtomId Formula::atom() const { return payload_as<AtomId>(*node_, Connective::Atom, "an atom"); }

const Formula& Formula::lhs() const {
  if (node_->kind != Connective::Implies && node_->kind != Connective::Conj)
    throw std::logic_error("formula is not binary");
  return std::get<std::pair<Formula, Formula>>(node_->payload).first;
}

const Formula& Formula::rhs() const {
  if (node_->kind != Connective::Implies && node_->kind != Connective::Conj)
    throw std::logic_error("formula is not binary");
  return std::get<std::pair<Formula, Formula>>(node_->payload).second;
}

const FormulaStream& Formula::stream() const {
  if (node_->kind != Connective::CountConj && node_->kind != Connective::CountDisj)
    throw std::logic_error("formula is not infinitary");
  return std::get<FormulaStream>(node_->payload);
}

const UnitRational& Formula::constant() const {
  return payload_as<UnitRational>(*node_, Connective::RatConst, "a rational constant");
}

const DigitStream& Formula::digits() const {
  return payload_as<DigitStream>(*node_, Connective::RealConst, "a real constant");
}

Formula bottom() {
  static const auto node =
      std::make_shared<const Formula::Node>(Formula::Node{Connective::Bottom, std::monostate{}});
  return Formula(node);
}

Formula atom(AtomId id) {
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{Connective::Atom, id}));
}

Formula implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Connective::Implies, std::pair{std::move(lhs), std::move(rhs)}}));
}

Formula conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Connective::Conj, std::pair{std::move(lhs), std::move(rhs)}}));
}

Formula count_conj(FormulaStream stream) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Connective::CountConj, std::move(stream)}));
}

Formula count_disj(FormulaStream stream) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Connective::CountDisj, std::move(stream)}));
}

Formula rat_const(const UnitRational& q) {
  if (q.value().is_zero()) return bottom();
  if (q.value() == Rational(1)) return top();
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{Connective::RatConst, q}));
}

Formula real_const(DigitStream d) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Connective::RealConst, std::move(d)}));
}

Formula neg(Formula phi) { return implies(std::move(phi), bottom()); }

Formula top() { return neg(bottom()); }

Formula iff(Formula phi, Formula psi) { return conj(implies(phi, psi), implies(psi, phi)); }

Formula lor(Formula phi, Formula psi) {
  return conj(implies(implies(phi, psi), psi), implies(implies(psi, phi), phi));
}

struct FormulaStream::State {
  Generator generate;
  ConvergenceHint hint;
  bool q_tier;
  std::mutex mutex;
  std::vector<std::optional<Formula>> memo;
};

FormulaStream::FormulaStream(Generator generate, ConvergenceHint hint, std::string name,
                             bool q_tier)
    : state_(std::make_shared<State>()), name_(std::move(name)) {
  if (!generate) throw std::invalid_argument("formula stream without generator");
  if (hint.kind != HintKind::None && !hint.width_at)
    throw std::invalid_argument("convergence hint without width function");
  state_->generate = std::move(generate);
  state_->hint = std::move(hint);
  state_->q_tier = q_tier;
}

Formula FormulaStream::at(std::size_t i) const {
  {
    std::lock_guard lock(state_->mutex);
    if (i < state_->memo.size() && state_->memo[i]) return *state_->memo[i];
  }
  // Generated outside the lock: generators may query other streams.
  Formula value = state_->generate(i);
  std::lock_guard lock(state_->mutex);
  if (i >= state_->memo.size()) state_->memo.resize(i + 1);
  if (!state_->memo[i]) state_->memo[i] = std::move(value);
  return *state_->memo[i];
}

const ConvergenceHint& FormulaStream::hint() const { return state_->hint; }

bool FormulaStream::q_tier() const { return state_->q_tier; }

FormulaStream FormulaStream::with_name(std::string name) const {
  FormulaStream copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

}  // namespace goedel
