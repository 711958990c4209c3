#include <algorithm>

#include "goedel/formula.hpp"

namespace goedel {

namespace {

template <class Visit>
void walk(const Formula& phi, std::size_t n, Visit& visit) {
  visit(phi);
  switch (phi.kind()) {
    case Connective::Implies:
    case Connective::Conj:
      walk(phi.lhs(), n, visit);
      walk(phi.rhs(), n, visit);
      break;
    case Connective::CountConj:
    case Connective::CountDisj:
      for (std::size_t i = 0; i < n; ++i) walk(phi.stream().at(i), n, visit);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Formula> subformulas_to_depth(const Formula& phi, std::size_t n) {
  std::vector<Formula> out;
  auto collect = [&out](const Formula& f) { out.push_back(f); };
  walk(phi, n, collect);
  return out;
}

bool structural_eq_to_depth(const Formula& phi, const Formula& psi, std::size_t n) {
  if (phi.kind() != psi.kind()) return false;
  switch (phi.kind()) {
    case Connective::Bottom:
      return true;
    case Connective::Atom:
      return phi.atom() == psi.atom();
    case Connective::Implies:
    case Connective::Conj:
      return structural_eq_to_depth(phi.lhs(), psi.lhs(), n) &&
             structural_eq_to_depth(phi.rhs(), psi.rhs(), n);
    case Connective::CountConj:
    case Connective::CountDisj:
      for (std::size_t i = 0; i < n; ++i)
        if (!structural_eq_to_depth(phi.stream().at(i), psi.stream().at(i), n)) return false;
      return true;
    case Connective::RatConst:
      return phi.constant() == psi.constant();
    case Connective::RealConst:
      for (std::size_t i = 1; i <= n; ++i)
        if (phi.digits().digit_at(i) != psi.digits().digit_at(i)) return false;
      return true;
  }
  return false;
}

bool is_q_tier(const Formula& phi, std::size_t n) {
  bool q_tier = true;
  auto check = [&q_tier](const Formula& f) {
    if (f.kind() == Connective::RealConst) q_tier = false;
  };
  walk(phi, n, check);
  return q_tier;
}

std::set<AtomId> atoms_to_depth(const Formula& phi, std::size_t n) {
  std::set<AtomId> atoms;
  auto collect = [&atoms](const Formula& f) {
    if (f.kind() == Connective::Atom) atoms.insert(f.atom());
  };
  walk(phi, n, collect);
  return atoms;
}

std::vector<Rational> constants_to_depth(const Formula& phi, std::size_t n) {
  std::vector<Rational> out;
  auto collect = [&out, n](const Formula& f) {
    if (f.kind() == Connective::RatConst) {
      out.push_back(f.constant().value());
    } else if (f.kind() == Connective::RealConst) {
      Rational lo = truncate(f.digits(), n).value();
      out.push_back(lo);
      out.push_back(lo + Rational::pow10_inverse(n));
    }
  };
  walk(phi, n, collect);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_finite(const Formula& phi) {
  switch (phi.kind()) {
    case Connective::Implies:
    case Connective::Conj:
      return is_finite(phi.lhs()) && is_finite(phi.rhs());
    case Connective::CountConj:
    case Connective::CountDisj:
    case Connective::RealConst:
      return false;
    default:
      return true;
  }
}

std::size_t node_count(const Formula& phi) {
  if (phi.kind() == Connective::Implies || phi.kind() == Connective::Conj)
    return 1 + node_count(phi.lhs()) + node_count(phi.rhs());
  return 1;
}

}  // namespace goedel
