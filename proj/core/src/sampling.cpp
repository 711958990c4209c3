#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include "goedel/semantics.hpp"

namespace goedel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// std::uniform_int_distribution is implementation-defined; reports must be
// byte-identical across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

UnitRational random_truth_value(std::mt19937_64& rng) {
  const auto den = static_cast<std::int64_t>(1 + bounded(rng, 64));
  const auto num = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(den) + 1));
  return UnitRational(Rational(num, den));
}

// Returns the violating interval, if any, for one valuation.
using Probe = std::function<std::optional<TruthInterval>(const Valuation&)>;

Verdict search(const std::vector<AtomId>& atoms, const std::vector<Rational>& constants,
               const SamplerConfig& sampler, const Probe& probe) {
  const std::vector<Rational> grid = boundary_values(constants);
  std::size_t tried = 0;

  // Mixed-radix enumeration, first atom varying fastest.
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size() && total <= sampler.grid_limit; ++i) total *= grid.size();
  total = std::min(total, sampler.grid_limit);
  for (std::size_t index = 0; index < total; ++index) {
    Valuation v;
    std::size_t rest = index;
    for (AtomId atom : atoms) {
      v.set(atom, UnitRational(grid[rest % grid.size()]));
      rest /= grid.size();
    }
    ++tried;
    if (auto bad = probe(v)) return Counterexample(std::move(v), *bad, SampleSource::Grid, index);
  }

  for (std::size_t index = 0; index < sampler.sample_count; ++index) {
    Valuation v = random_valuation(sampler.seed, index, atoms);
    ++tried;
    if (auto bad = probe(v)) return Counterexample(std::move(v), *bad, SampleSource::Random, index);
  }
  return NoCounterexampleFound{tried};
}

}  // namespace

Valuation random_valuation(std::uint64_t seed, std::size_t index, std::span<const AtomId> atoms) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
  Valuation v;
  for (AtomId atom : atoms) v.set(atom, random_truth_value(rng));
  v.set_default(random_truth_value(rng));
  return v;
}

std::vector<Rational> boundary_values(std::span<const Rational> constants) {
  std::vector<Rational> base{Rational(0), Rational(1)};
  for (const Rational& c : constants)
    if (Rational(0) <= c && c <= Rational(1)) base.push_back(c);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.push_back(base[i]);
    if (i + 1 < base.size()) out.push_back((base[i] + base[i + 1]) / Rational(2));
  }
  return out;
}

Verdict check_tautology(const Formula& phi, const EvalConfig& cfg, const SamplerConfig& sampler) {
  const std::set<AtomId> atom_set = atoms_to_depth(phi, cfg.depth);
  const std::vector<AtomId> atoms(atom_set.begin(), atom_set.end());
  return search(atoms, constants_to_depth(phi, cfg.depth), sampler,
                [&](const Valuation& v) -> std::optional<TruthInterval> {
                  TruthInterval value = eval(phi, v, cfg);
                  if (value.hi() < Rational(1)) return value;
                  return std::nullopt;
                });
}

Verdict check_entailment(std::span<const Formula> premises, const Formula& conclusion,
                         const EvalConfig& cfg, const SamplerConfig& sampler) {
  std::set<AtomId> atom_set = atoms_to_depth(conclusion, cfg.depth);
  std::vector<Rational> constants = constants_to_depth(conclusion, cfg.depth);
  for (const Formula& p : premises) {
    atom_set.merge(atoms_to_depth(p, cfg.depth));
    auto more = constants_to_depth(p, cfg.depth);
    constants.insert(constants.end(), more.begin(), more.end());
  }
  const std::vector<AtomId> atoms(atom_set.begin(), atom_set.end());
  return search(atoms, constants, sampler,
                [&](const Valuation& v) -> std::optional<TruthInterval> {
                  // inf over an empty premise set is 1.
                  Rational premise_lo(1);
                  for (const Formula& p : premises) premise_lo = min(premise_lo, eval(p, v, cfg).lo());
                  TruthInterval value = eval(conclusion, v, cfg);
                  if (premise_lo > value.hi()) return value;
                  return std::nullopt;
                });
}

}  // namespace goedel
