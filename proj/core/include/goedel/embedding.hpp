#pragma once

#include <cstddef>
#include <string_view>

#include "goedel/digit_stream.hpp"
#include "goedel/formula.hpp"
#include "goedel/semantics.hpp"

namespace goedel {

/// Plus: disjunctive route (increasing truncations, t+).
/// Minus: conjunctive route (decreasing upper truncations, t-).
enum class Mode { Plus, Minus };

std::string_view to_string(Mode m);

/// i -> rat_const(truncate(d, i)), named "Phi(<d>)", with a MonotoneUp
/// hint of width 10^-(n-1).
FormulaStream phi_stream(const DigitStream& d);

/// i -> rat_const(upper_truncate(d, i)), named "Psi(<d>)", with a
/// MonotoneDown hint of width 10^-(n-1). Element 0 is 1.
FormulaStream psi_stream(const DigitStream& d);

/// CountDisj(phi_stream(d)) for Plus, CountConj(psi_stream(d)) for Minus.
Formula real_const_formula(const DigitStream& d, Mode m);

/// real_const(d) <-> real_const_formula(d, m)
Formula ir_axiom(const DigitStream& d, Mode m);

/// Replaces every real constant by its composite definition, lazily inside
/// streams. The result contains no real constants.
Formula translate(const Formula& phi, Mode m);

/// check_tautology(iff(phi, translate(phi, m))).
Verdict equivalence_check(const Formula& phi, Mode m, const EvalConfig& cfg,
                          const SamplerConfig& sampler);

struct FragmentReport {
  bool uses_count_conj = false;
  bool uses_count_disj = false;
  bool uses_real_const = false;

  friend bool operator==(const FragmentReport&, const FragmentReport&) = default;
};

FragmentReport fragment_report(const Formula& phi, std::size_t depth);

}  // namespace goedel
