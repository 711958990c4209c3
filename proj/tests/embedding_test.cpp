#include <gtest/gtest.h>

#include "closed_form.hpp"
#include "generators.hpp"
#include "goedel/embedding.hpp"
#include "goedel/parser.hpp"
#include "oracles.hpp"

namespace goedel {
namespace {

const StreamRegistry& reg() {
  static const StreamRegistry r = builtin_registry();
  return r;
}

const DigitStream& root_half() { return reg().digits("sqrt2over2"); }

Formula rc(std::int64_t n, std::int64_t d) { return rat_const(UnitRational(Rational(n, d))); }

TEST(PhiStream, Examples) {
  const FormulaStream phi = phi_stream(root_half());
  EXPECT_EQ(phi.at(0).kind(), Connective::Bottom);
  EXPECT_TRUE(structural_eq_to_depth(phi.at(3), rc(707, 1000), 1));
  EXPECT_EQ(phi.name(), "Phi(sqrt2over2)");
  EXPECT_EQ(phi.hint().kind, HintKind::MonotoneUp);
  EXPECT_EQ(phi.hint().width_at(4), Rational(1, 1000));
  EXPECT_TRUE(phi.q_tier());
}

TEST(PsiStream, Examples) {
  const FormulaStream psi = psi_stream(root_half());
  EXPECT_TRUE(structural_eq_to_depth(psi.at(0), top(), 1));
  EXPECT_TRUE(structural_eq_to_depth(psi.at(1), rc(8, 10), 1));
  EXPECT_TRUE(structural_eq_to_depth(psi.at(3), rc(708, 1000), 1));
  EXPECT_EQ(psi.hint().kind, HintKind::MonotoneDown);
}

TEST(PhiPsi, ElementsBracketTheOracleStrictly) {
  for (const auto& name : testing::registered_reals()) {
    const DigitStream& d = reg().digits(name);
    const std::string digits = testing::oracle_digits(name, 40);
    const Rational below = oracle::decimal(digits);
    const Rational above = below + Rational::pow10_inverse(40);
    const FormulaStream phi = phi_stream(d), psi = psi_stream(d);
    Rational previous(-1);
    for (std::size_t i = 0; i <= 30; ++i) {
      const Rational q = eval_exact(phi.at(i), Valuation()).value();
      const Rational q_up = eval_exact(psi.at(i), Valuation()).value();
      ASSERT_LE(q, below) << name << " " << i;
      ASSERT_GE(q_up, above) << name << " " << i;
      ASSERT_GE(q, previous);
      previous = q;
    }
  }
}

TEST(RealConstFormula, EnclosesOracleAtDepthSeven) {
  const std::string digits = oracle::sqrt_digits(1, 2, 12);
  const Rational oracle_lo = oracle::decimal(digits);
  const Rational oracle_hi = oracle_lo + Rational::pow10_inverse(12);
  const TruthInterval bound(Rational(707106, 1'000'000), Rational(707107, 1'000'000) + Rational(1, 1'000'000));
  for (Mode m : {Mode::Plus, Mode::Minus}) {
    const TruthInterval v = eval(real_const_formula(root_half(), m), Valuation(), EvalConfig(7));
    EXPECT_TRUE(bound.contains(v)) << v;
    EXPECT_TRUE(v.contains(TruthInterval(oracle_lo, oracle_hi))) << v;
  }
}

TEST(RealConstFormula, ModesAlwaysIntersect) {
  for (const auto& name : testing::registered_reals()) {
    for (std::size_t n = 1; n <= 15; ++n) {
      const auto& d = reg().digits(name);
      const TruthInterval plus = eval(real_const_formula(d, Mode::Plus), Valuation(), EvalConfig(n));
      const TruthInterval minus = eval(real_const_formula(d, Mode::Minus), Valuation(), EvalConfig(n));
      EXPECT_TRUE(plus.intersects(minus));
      EXPECT_TRUE(plus.intersects(eval(real_const(d), Valuation(), EvalConfig(n))));
    }
  }
}

TEST(IrAxiom, ShapeAndValidity) {
  const Formula ax = ir_axiom(root_half(), Mode::Plus);
  ASSERT_EQ(ax.kind(), Connective::Conj);
  EXPECT_EQ(ax.lhs().kind(), Connective::Implies);
  EXPECT_EQ(ax.rhs().kind(), Connective::Implies);
  EXPECT_EQ(ax.lhs().lhs().kind(), Connective::RealConst);
  EXPECT_EQ(ax.lhs().rhs().kind(), Connective::CountDisj);
  EXPECT_TRUE(is_q_tier(translate(ax, Mode::Plus), 20));
  for (std::size_t n = 1; n <= 10; ++n) {
    for (Mode m : {Mode::Plus, Mode::Minus}) {
      const Formula a = ir_axiom(root_half(), m);
      EXPECT_TRUE(eval(a.lhs().lhs(), Valuation(), EvalConfig(n))
                      .intersects(eval(a.lhs().rhs(), Valuation(), EvalConfig(n))));
      EXPECT_EQ(eval(a, Valuation(), EvalConfig(n)).hi(), Rational(1));
    }
  }
}

TEST(Translate, Examples) {
  EXPECT_TRUE(structural_eq_to_depth(translate(rc(1, 2), Mode::Plus), rc(1, 2), 20));
  const Formula phi = implies(atom(0), real_const(root_half()));
  const Formula expected = implies(atom(0), count_disj(phi_stream(root_half())));
  EXPECT_TRUE(structural_eq_to_depth(translate(phi, Mode::Plus), expected, 20));
  EXPECT_EQ(print(translate(phi, Mode::Plus)), "p0 -> \\/[Phi(sqrt2over2)]");
  EXPECT_EQ(print(translate(phi, Mode::Minus)), "p0 -> /\\[Psi(sqrt2over2)]");
}

TEST(Translate, IdentityOnQTierAndTotalOnRTier) {
  testing::Gen g(55);
  testing::Shape q_only;
  q_only.real_consts = false;
  for (int k = 0; k < 50; ++k) {
    const Formula q = testing::random_formula(g, reg(), 5, q_only);
    const Formula r = testing::random_formula(g, reg(), 5, {});
    for (Mode m : {Mode::Plus, Mode::Minus}) {
      EXPECT_TRUE(structural_eq_to_depth(translate(q, m), q, 20));
      EXPECT_TRUE(is_q_tier(translate(r, m), 20));
    }
  }
}

TEST(Translate, StreamsAreTranslatedLazily) {
  int calls = 0;
  FormulaStream s([&calls](std::size_t) {
    ++calls;
    return real_const(root_half());
  });
  const Formula t = translate(count_disj(s), Mode::Plus);
  EXPECT_EQ(calls, 0);
  EXPECT_EQ(t.stream().at(2).kind(), Connective::CountDisj);
  EXPECT_EQ(calls, 1);
  EXPECT_FALSE(render(t).reparseable);
}

TEST(EquivalenceCheck, Examples) {
  const SamplerConfig sampler{4, 1000};
  EXPECT_FALSE(refuted(equivalence_check(rc(1, 3), Mode::Plus, EvalConfig(5), sampler)));
  for (std::size_t n = 1; n <= 8; ++n)
    for (Mode m : {Mode::Plus, Mode::Minus})
      EXPECT_FALSE(refuted(equivalence_check(real_const(root_half()), m, EvalConfig(n), sampler)));
}

TEST(EquivalenceCheck, RandomRTierFormulas) {
  testing::Gen g(808);
  for (int k = 0; k < 15; ++k) {
    const Formula phi = testing::random_formula(g, reg(), 4, {});
    for (Mode m : {Mode::Plus, Mode::Minus})
      ASSERT_FALSE(refuted(equivalence_check(phi, m, EvalConfig(5), SamplerConfig{g.engine()(), 200, 512})))
          << print(phi);
  }
}

TEST(FragmentReport, Examples) {
  const auto& d = reg().digits("sqrt3over2");
  EXPECT_EQ(fragment_report(translate(real_const(d), Mode::Plus), 5),
            (FragmentReport{false, true, false}));
  EXPECT_EQ(fragment_report(translate(real_const(d), Mode::Minus), 5),
            (FragmentReport{true, false, false}));
  EXPECT_EQ(fragment_report(rc(1, 2), 5), (FragmentReport{}));
  EXPECT_EQ(fragment_report(real_const(d), 5), (FragmentReport{false, false, true}));
}

TEST(FragmentReport, TranslationPreservesOneSidedFragments) {
  testing::Gen g(21);
  testing::Shape disj_only;
  disj_only.count_conj = false;
  testing::Shape conj_only;
  conj_only.count_disj = false;
  for (int k = 0; k < 20; ++k) {
    const Formula a = testing::random_formula(g, reg(), 5, disj_only);
    const Formula b = testing::random_formula(g, reg(), 5, conj_only);
    ASSERT_FALSE(fragment_report(a, 6).uses_count_conj);
    EXPECT_FALSE(fragment_report(translate(a, Mode::Plus), 6).uses_count_conj);
    EXPECT_FALSE(fragment_report(translate(b, Mode::Minus), 6).uses_count_disj);
  }
}

}  // namespace
}  // namespace goedel
