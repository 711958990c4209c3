#include "goedel/registry.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "goedel/embedding.hpp"
#include "goedel/error.hpp"

namespace goedel {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void StreamRegistry::add_digits(const std::string& name, const DigitStream& d) {
  if (!is_identifier(name)) throw std::invalid_argument("malformed stream name '" + name + "'");
  if (digits_.contains(name)) throw std::invalid_argument("duplicate digit stream '" + name + "'");
  DigitStream named = d.with_name(name);
  digits_.emplace(name, named);
  formulas_.insert_or_assign("Phi(" + name + ")", phi_stream(named));
  formulas_.insert_or_assign("Psi(" + name + ")", psi_stream(named));
}

void StreamRegistry::add_formulas(const std::string& name, const FormulaStream& s) {
  if (!is_identifier(name)) throw std::invalid_argument("malformed stream name '" + name + "'");
  if (formulas_.contains(name))
    throw std::invalid_argument("duplicate formula stream '" + name + "'");
  formulas_.emplace(name, s.with_name(name));
}

bool StreamRegistry::has_digits(std::string_view name) const { return digits_.contains(name); }
bool StreamRegistry::has_formulas(std::string_view name) const {
  return formulas_.contains(name);
}

const DigitStream& StreamRegistry::digits(std::string_view name) const {
  auto it = digits_.find(name);
  if (it == digits_.end()) throw RegistryError("unknown real constant '" + std::string(name) + "'");
  return it->second;
}

const FormulaStream& StreamRegistry::formulas(std::string_view name) const {
  auto it = formulas_.find(name);
  if (it == formulas_.end())
    throw RegistryError("unknown formula stream '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> StreamRegistry::digit_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : digits_) out.push_back(name);
  return out;
}

std::vector<std::string> StreamRegistry::formula_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : formulas_) out.push_back(name);
  return out;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("GOEDEL_OMEGA_DATA_DIR"); env && *env) return env;
#ifdef GOEDEL_SOURCE_DATA_DIR
  if (std::filesystem::exists(GOEDEL_SOURCE_DATA_DIR)) return GOEDEL_SOURCE_DATA_DIR;
#endif
#ifdef GOEDEL_INSTALL_DATA_DIR
  return GOEDEL_INSTALL_DATA_DIR;
#else
  return "data";
#endif
}

StreamRegistry builtin_registry(const std::filesystem::path& data_dir) {
  StreamRegistry r;
  r.add_digits("sqrt2over2", sqrt_stream(Rational(1, 2)));
  r.add_digits("sqrt3over2", sqrt_stream(Rational(3, 4)));
  r.add_digits("sqrt5over3", sqrt_stream(Rational(5, 9)));
  r.add_digits("sqrt2minus1", file_stream(data_dir / "digits" / "sqrt2minus1.txt", {}, true));
  r.add_digits("goldenratio_conj",
               file_stream(data_dir / "digits" / "goldenratio_conj.txt", {}, true));

  r.add_formulas("atoms", FormulaStream([](std::size_t i) { return atom(i); }, {}, {}, true));
  r.add_formulas("approach_one",
                 FormulaStream(
                     [](std::size_t i) {
                       return rat_const(UnitRational(Rational(1) - Rational::pow10_inverse(i)));
                     },
                     ConvergenceHint::decimal(HintKind::MonotoneUp), {}, true));
  r.add_formulas("halves",
                 FormulaStream(
                     [](std::size_t i) {
                       Rational q(1);
                       for (std::size_t k = 0; k < i; ++k) q /= Rational(2);
                       return rat_const(UnitRational(q));
                     },
                     ConvergenceHint::geometric(HintKind::MonotoneDown, Rational(1, 2)), {}, true));
  return r;
}

}  // namespace goedel
