#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "goedel/formula.hpp"
#include "goedel/registry.hpp"
#include "goedel/semantics.hpp"

namespace goedel {

/// Parses the concrete formula syntax:
///
///   atoms        p0 p1 ...            bottom     _|_
///   implication  a -> b   (right-assoc, lowest precedence, with <->)
///   derived      a <-> b,  a | b,  ~a  (expanded while parsing)
///   conjunction  a & b    (binds tighter than |)
///   rationals    #(a/b)  #0.25        reals      #real(NAME)
///   infinitary   /\[NAME]  \/[NAME]  /\[Psi(NAME)]  \/[Phi(NAME)]
///
/// Throws ParseError (with column) on malformed input and RegistryError on
/// unknown names.
Formula parse(std::string_view text, const StreamRegistry& registry);

struct Rendering {
  std::string text;
  /// False when an anonymous stream or digit source was rendered as a
  /// display-only preview.
  bool reparseable = true;
};

/// Prints primitives with the parentheses needed to reparse to the same
/// tree. `depth` is the number of elements shown for anonymous streams.
Rendering render(const Formula& phi, std::size_t depth = 3);

inline std::string print(const Formula& phi, std::size_t depth = 3) {
  return render(phi, depth).text;
}

/// Formula-file lines with blank lines and comment lines removed. A comment
/// line starts with '#' not followed by '(', a digit or "real(".
std::vector<std::string> formula_lines(std::string_view text);

/// Valuation text: lines `p<k> = a/b` or `p<k> = 0.<digits>` and exactly one
/// `default = ...` line; '#' starts a comment line.
Valuation parse_valuation(std::string_view text);

/// Inverse of parse_valuation (fractions, atoms in increasing order).
std::string format_valuation(const Valuation& valuation);

/// Whole-file read; throws IoError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace goedel
