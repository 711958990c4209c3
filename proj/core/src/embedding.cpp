#include "goedel/embedding.hpp"

#include <stdexcept>

namespace goedel {

std::string_view to_string(Mode m) { return m == Mode::Plus ? "+" : "-"; }

namespace {

std::string stream_name(std::string_view prefix, const DigitStream& d) {
  return d.named() ? std::string(prefix) + "(" + d.name() + ")" : std::string{};
}

}  // namespace

FormulaStream phi_stream(const DigitStream& d) {
  // Examining n elements reaches q_{n-1}, which is within 10^-(n-1) of the sup.
  return FormulaStream([d](std::size_t i) { return rat_const(truncate(d, i)); },
                       ConvergenceHint::decimal(HintKind::MonotoneUp), stream_name("Phi", d),
                       true);
}

FormulaStream psi_stream(const DigitStream& d) {
  // upper_truncate(d, 0) = 1, so element 0 is top.
  return FormulaStream([d](std::size_t i) { return rat_const(upper_truncate(d, i)); },
                       ConvergenceHint::decimal(HintKind::MonotoneDown), stream_name("Psi", d),
                       true);
}

Formula real_const_formula(const DigitStream& d, Mode m) {
  return m == Mode::Plus ? count_disj(phi_stream(d)) : count_conj(psi_stream(d));
}

Formula ir_axiom(const DigitStream& d, Mode m) {
  return iff(real_const(d), real_const_formula(d, m));
}

namespace {

FormulaStream translate_stream(const FormulaStream& s, Mode m) {
  if (s.q_tier()) return s;
  return FormulaStream([s, m](std::size_t i) { return translate(s.at(i), m); }, s.hint(), {},
                       true);
}

}  // namespace

Formula translate(const Formula& phi, Mode m) {
  switch (phi.kind()) {
    case Connective::Bottom:
    case Connective::Atom:
    case Connective::RatConst:
      return phi;
    case Connective::Implies:
      return implies(translate(phi.lhs(), m), translate(phi.rhs(), m));
    case Connective::Conj:
      return conj(translate(phi.lhs(), m), translate(phi.rhs(), m));
    case Connective::CountConj:
      return count_conj(translate_stream(phi.stream(), m));
    case Connective::CountDisj:
      return count_disj(translate_stream(phi.stream(), m));
    case Connective::RealConst:
      return real_const_formula(phi.digits(), m);
  }
  throw std::logic_error("unhandled connective");
}

Verdict equivalence_check(const Formula& phi, Mode m, const EvalConfig& cfg,
                          const SamplerConfig& sampler) {
  return check_tautology(iff(phi, translate(phi, m)), cfg, sampler);
}

FragmentReport fragment_report(const Formula& phi, std::size_t depth) {
  FragmentReport report;
  for (const Formula& f : subformulas_to_depth(phi, depth)) {
    switch (f.kind()) {
      case Connective::CountConj:
        report.uses_count_conj = true;
        break;
      case Connective::CountDisj:
        report.uses_count_disj = true;
        break;
      case Connective::RealConst:
        report.uses_real_const = true;
        break;
      default:
        break;
    }
  }
  return report;
}

}  // namespace goedel
