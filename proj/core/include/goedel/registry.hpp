#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "goedel/digit_stream.hpp"
#include "goedel/formula.hpp"

namespace goedel {

/// Finite names for digit streams and formula streams.
///
/// Registering a digit stream NAME also makes `Phi(NAME)` and `Psi(NAME)`
/// available as formula streams. Built once, then read-only.
class StreamRegistry {
 public:
  /// Throws std::invalid_argument on a duplicate or malformed name.
  void add_digits(const std::string& name, const DigitStream& d);
  void add_formulas(const std::string& name, const FormulaStream& s);

  bool has_digits(std::string_view name) const;
  bool has_formulas(std::string_view name) const;

  /// Throw RegistryError for unknown names.
  const DigitStream& digits(std::string_view name) const;
  const FormulaStream& formulas(std::string_view name) const;

  std::vector<std::string> digit_names() const;
  std::vector<std::string> formula_names() const;

 private:
  std::map<std::string, DigitStream, std::less<>> digits_;
  std::map<std::string, FormulaStream, std::less<>> formulas_;
};

bool is_identifier(std::string_view name);

/// Directory holding digits/*.txt: $GOEDEL_OMEGA_DATA_DIR, else the source
/// tree, else the install prefix.
std::filesystem::path default_data_dir();

/// Registry with the bundled irrationals
///   sqrt2over2 = sqrt(1/2), sqrt3over2 = sqrt(3/4), sqrt5over3 = sqrt(5/9),
///   sqrt2minus1, goldenratio_conj  (digit files under data_dir/digits)
/// and the formula streams
///   atoms        i -> p_i
///   approach_one i -> 1 - 10^-i   (MonotoneUp)
///   halves       i -> 2^-i        (MonotoneDown)
/// Throws IoError when a bundled digit file is missing.
StreamRegistry builtin_registry(const std::filesystem::path& data_dir = default_data_dir());

}  // namespace goedel
