// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "generators.hpp"
#include "golden_cases.hpp"
#include "oracles.hpp"

namespace {

using namespace goedel;
using goedel::testing::Gen;
using goedel::testing::Shape;

constexpr std::size_t kOracleDigits = 24;

const StreamRegistry& reg() {
  static const StreamRegistry r = builtin_registry();
  return r;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Rational pow10_inv(std::size_t n) { return Rational(BigInt(1), oracle::pow10(n)); }

// Oracle bracket [q24, q24 + 10^-24] around the real limit.
TruthInterval oracle_bracket(const std::string& name) {
  Rational q = oracle::decimal(testing::oracle_digits(name, kOracleDigits));
  return TruthInterval(UnitRational(q), UnitRational(q + pow10_inv(kOracleDigits)));
}

bool encloses(const TruthInterval& outer, const TruthInterval& inner) {
  return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

Outcome bracketing() {
  Outcome o;
  for (const auto& name : testing::registered_reals()) {
    const DigitStream& d = reg().digits(name);
    TruthInterval b = oracle_bracket(name);
    for (std::size_t n = 1; n <= 12; ++n) {
      Rational lo = truncate(d, n).value();
      Rational hi = upper_truncate(d, n).value();
      if (!(lo < b.lo())) o.fail(name + ": truncate not below oracle at n=" + std::to_string(n));
      if (!(b.hi() < hi)) o.fail(name + ": upper not above oracle at n=" + std::to_string(n));
      if (hi - lo != pow10_inv(n)) o.fail(name + ": gap differs from 10^-n at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome enclosure() {
  Outcome o;
  Gen g(11);
  std::vector<Valuation> valuations;
  for (int k = 0; k < 100; ++k) valuations.push_back(g.valuation());
  for (const auto& name : testing::registered_reals()) {
    TruthInterval b = oracle_bracket(name);
    const Formula routes[] = {count_disj(reg().formulas("Phi(" + name + ")")),
                              count_conj(reg().formulas("Psi(" + name + ")"))};
    for (const Formula& phi : routes) {
      for (std::size_t n = 1; n <= 12; ++n) {
        const std::string at = name + " n=" + std::to_string(n);
        EvalConfig cfg(n);
        TruthInterval first = eval(phi, valuations.front(), cfg);
        if (first.width() > pow10_inv(n - 1)) o.fail(at + ": width above 10^-(n-1)");
        if (!encloses(first, b)) o.fail(at + ": oracle bracket not enclosed");
        for (const auto& v : valuations)
          if (!(eval(phi, v, cfg) == first)) o.fail(at + ": depends on valuation");
      }
    }
  }
  return o;
}

Outcome goedel_laws() {
  Outcome o;
  Gen g(23);
  for (int k = 0; k < 10000; ++k) {
    Formula a = testing::random_finite(g, 6);
    Formula b = testing::random_finite(g, 6);
    Valuation v = g.valuation();
    Rational va = testing::reference_value(a, v);
    Rational vb = testing::reference_value(b, v);
    const std::string at = " at case " + std::to_string(k);
    if (eval_exact(lor(a, b), v).value() != max(va, vb)) o.fail("disjunction is not max" + at);
    if (eval_exact(conj(a, b), v).value() != min(va, vb)) o.fail("conjunction is not min" + at);
    if (eval_exact(implies(a, a), v).value() != Rational(1)) o.fail("self-implication below 1" + at);
    if (eval_exact(neg(neg(neg(a))), v) != eval_exact(neg(a), v)) o.fail("triple negation" + at);
  }
  return o;
}

Outcome linearity() {
  Outcome o;
  const Formula p = atom(0), q = atom(1);
  SamplerConfig sampler;
  sampler.seed = 5;
  sampler.sample_count = 10000;
  EvalConfig cfg(10);
  Verdict lin = check_tautology(lor(implies(p, q), implies(q, p)), cfg, sampler);
  if (refuted(lin)) o.fail("linearity refuted");
  Verdict lem = check_tautology(lor(p, neg(p)), cfg, sampler);
  if (!refuted(lem)) {
    o.fail("excluded middle not refuted");
  } else {
    const auto& cx = std::get<Counterexample>(lem);
    if (cx.source() != SampleSource::Grid) o.fail("excluded middle refuted outside the grid");
    if (cx.interval().hi() > Rational(1, 2)) o.fail("excluded middle counterexample above 1/2");
  }
  return o;
}

Outcome translation() {
  Outcome o;
  Gen g(31);
  Shape shape;
  SamplerConfig sampler;
  sampler.sample_count = 1000;
  sampler.grid_limit = 256;
  EvalConfig cfg(12);
  int generated = 0;
  while (generated < 100) {
    Formula phi = testing::random_formula(g, reg(), 5, shape);
    if (!fragment_report(phi, 20).uses_real_const) continue;
    const std::string at = " at formula " + std::to_string(generated);
    sampler.seed = static_cast<std::uint64_t>(generated);
    Formula plus = translate(phi, Mode::Plus);
    Formula minus = translate(phi, Mode::Minus);
    if (fragment_report(plus, 20).uses_real_const) o.fail("real constant survives t+" + at);
    if (fragment_report(minus, 20).uses_real_const) o.fail("real constant survives t-" + at);
    for (Mode m : {Mode::Plus, Mode::Minus})
      if (refuted(equivalence_check(phi, m, cfg, sampler)))
        o.fail(std::string("equivalence refuted for mode ") + std::string(to_string(m)) + at);
    for (int k = 0; k < 10; ++k) {
      Valuation v = g.valuation();
      if (!eval(plus, v, cfg).intersects(eval(minus, v, cfg))) o.fail("plus/minus disjoint" + at);
    }
    ++generated;
  }
  Shape rational = shape;
  rational.real_consts = false;
  int q_tier = 0;
  while (q_tier < 100) {
    Formula phi = testing::random_formula(g, reg(), 5, rational);
    if (!is_q_tier(phi, 20)) continue;
    for (Mode m : {Mode::Plus, Mode::Minus})
      if (!structural_eq_to_depth(translate(phi, m), phi, 20))
        o.fail("translation changes a rational formula at " + std::to_string(q_tier));
    ++q_tier;
  }
  return o;
}

Outcome fragments() {
  Outcome o;
  Gen g(43);
  for (Mode m : {Mode::Plus, Mode::Minus}) {
    Shape shape;
    (m == Mode::Plus ? shape.count_conj : shape.count_disj) = false;
    int cases = 0;
    while (cases < 20) {
      Formula phi = testing::random_formula(g, reg(), 5, shape);
      if (!fragment_report(phi, 20).uses_real_const) continue;
      FragmentReport r = fragment_report(translate(phi, m), 20);
      bool leaked = m == Mode::Plus ? r.uses_count_conj : r.uses_count_disj;
      if (leaked) o.fail(std::string("fragment not preserved by mode ") + std::string(to_string(m)));
      ++cases;
    }
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  Gen g(57);
  Shape named;
  named.named_only = true;
  for (int k = 0; k < 200; ++k) {
    Formula phi = k % 4 == 0 ? testing::random_finite(g, 5) : testing::random_formula(g, reg(), 5, named);
    Rendering r = render(phi);
    if (!r.reparseable) {
      o.fail("unprintable corpus formula " + std::to_string(k));
      continue;
    }
    if (!structural_eq_to_depth(parse(r.text, reg()), phi, 20)) o.fail("round-trip mismatch: " + r.text);
  }
  for (const auto& c : testing::load_golden_cases()) {
    testing::CliResult run = testing::run_cli(c.args);
    std::string expected;
    if (!testing::read_golden(c, expected)) o.fail("missing golden file " + c.name);
    else if (run.out != expected || run.code != c.expected_exit) o.fail("golden mismatch " + c.name);
  }
  return o;
}

Outcome implication_soundness() {
  Outcome o;
  Gen g(71);
  auto interval = [&g] {
    Rational a = g.unit_rational(), b = g.unit_rational();
    return TruthInterval(UnitRational(min(a, b)), UnitRational(max(a, b)));
  };
  // A point of [lo, hi]: an endpoint or a random convex combination.
  auto point_in = [&g](const TruthInterval& i) {
    switch (g.below(3)) {
      case 0:
        return i.lo();
      case 1:
        return i.hi();
      default: {
        Rational t = g.unit_rational();
        return i.lo() + t * (i.hi() - i.lo());
      }
    }
  };
  for (int k = 0; k < 10000; ++k) {
    TruthInterval x = interval(), y = interval();
    Rational a = point_in(x), b = point_in(y);
    Rational value = a <= b ? Rational(1) : b;
    TruthInterval out = implies_interval(x, y);
    if (value < out.lo() || out.hi() < value)
      o.fail("implication value outside interval at case " + std::to_string(k));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "truncation bracketing of registered irrationals", 5, bracketing},
      {2, "Phi/Psi enclosure width and valuation independence", 30, enclosure},
      {3, "Goedel laws on random finite formulas", 60, goedel_laws},
      {4, "linearity accepted, excluded middle refuted on grid", 10, linearity},
      {5, "translation removes reals and preserves values", 60, translation},
      {6, "fragment preservation under translation", 60, fragments},
      {7, "parser round-trip and CLI golden reports", 60, round_trip},
      {8, "interval implication soundness", 60, implication_soundness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_seconds) o.fail("over time budget");
    if (!o.ok) ++failures;
    std::printf("%s  criterion %d  %-52s %7.3f s (budget %g s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, secs, c.budget_seconds, o.ok ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
