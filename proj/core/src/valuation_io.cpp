#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "goedel/error.hpp"
#include "goedel/parser.hpp"

namespace goedel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("valuation line " + std::to_string(line) + ": " + message, 0, line);
}

}  // namespace

Valuation parse_valuation(std::string_view text) {
  Valuation v;
  bool have_default = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected '<atom> = <value>'");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value_text = trim(line.substr(eq + 1));
    Rational q;
    try {
      q = Rational::parse(value_text);
    } catch (const std::exception& e) {
      fail(line_no, e.what());
    }
    if (q < Rational(0) || q > Rational(1))
      fail(line_no, "value " + q.to_string() + " outside [0,1]");
    if (key == "default") {
      if (have_default) fail(line_no, "duplicate default");
      have_default = true;
      v.set_default(UnitRational(q));
      continue;
    }
    if (key.size() < 2 || key.front() != 'p') fail(line_no, "expected p<k> or default");
    for (char c : key.substr(1))
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(line_no, "expected p<k> or default");
    AtomId id = 0;
    try {
      id = std::stoull(std::string(key.substr(1)));
    } catch (const std::out_of_range&) {
      fail(line_no, "atom index too large");
    }
    if (v.assignments().contains(id)) fail(line_no, "duplicate assignment for p" + std::to_string(id));
    v.set(id, UnitRational(q));
  }
  if (!have_default) throw ParseError("valuation lacks a 'default = ...' line", 0);
  return v;
}

std::string format_valuation(const Valuation& valuation) {
  std::string out;
  for (const auto& [atom, value] : valuation.assignments())
    out += "p" + std::to_string(atom) + " = " + value.value().to_string() + "\n";
  out += "default = " + valuation.fallback().value().to_string() + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path.string());
  return text;
}

}  // namespace goedel
