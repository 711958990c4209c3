#include "goedel/parser.hpp"

#include <cctype>
#include <stdexcept>

#include "goedel/error.hpp"

namespace goedel {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const StreamRegistry& registry)
      : text_(text), registry_(registry) {}

  Formula parse_all() {
    Formula f = parse_formula();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  // formula := disj (('->' | '<->') formula)?
  Formula parse_formula() {
    Formula lhs = parse_disj();
    if (accept("->")) return implies(std::move(lhs), parse_formula());
    if (accept("<->")) return iff(std::move(lhs), parse_formula());
    return lhs;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (peek_disj()) {
      ++pos_;
      f = lor(std::move(f), parse_conj());
    }
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (accept("&")) f = conj(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept("~")) return neg(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Formula f = parse_formula();
      expect(")");
      return f;
    }
    if (accept("_|_")) return bottom();
    if (accept("/\\[")) return count_conj(parse_stream_ref());
    if (accept("\\/[")) return count_disj(parse_stream_ref());
    if (text_[pos_] == 'p' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      return atom(parse_index());
    }
    if (accept("#")) return parse_constant();
    fail("expected a formula");
  }

  Formula parse_constant() {
    const std::size_t start = pos_;
    if (accept_raw("real(")) {
      std::string name = parse_name();
      expect(")");
      return real_const(registry_.digits(name));
    }
    std::string literal;
    if (accept_raw("(")) {
      skip_space();
      literal = take_digits();
      expect("/");
      skip_space();
      literal += "/" + take_digits();
      expect(")");
    } else {
      literal = take_digits();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        literal += "." + take_digits();
      }
    }
    Rational q;
    try {
      q = Rational::parse(literal);
    } catch (const std::exception& e) {
      fail_at(start, std::string("malformed rational constant: ") + e.what());
    }
    if (q < Rational(0) || q > Rational(1))
      fail_at(start, "rational constant " + q.to_string() + " outside [0,1]");
    return rat_const(UnitRational(q));
  }

  FormulaStream parse_stream_ref() {
    skip_space();
    std::string name = parse_name();
    skip_space();
    if (accept_raw("(")) {
      if (name != "Phi" && name != "Psi")
        fail("only Phi(...) and Psi(...) take a digit stream argument");
      skip_space();
      std::string inner = parse_name();
      expect(")");
      registry_.digits(inner);
      name += "(" + inner + ")";
    }
    expect("]");
    return registry_.formulas(name);
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!is_identifier(name)) fail_at(start, "expected a stream name");
    return name;
  }

  AtomId parse_index() {
    const std::size_t start = pos_;
    std::string digits = take_digits();
    try {
      return std::stoull(digits);
    } catch (const std::out_of_range&) {
      fail_at(start, "atom index too large");
    }
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_disj() {
    skip_space();
    // A lone '|'; "_|_" always starts with '_'.
    return pos_ < text_.size() && text_[pos_] == '|';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    return accept_raw(token);
  }

  bool accept_raw(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void fail(const std::string& message) { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) {
    throw ParseError("parse error at column " + std::to_string(pos + 1) + ": " + message, pos + 1);
  }

  std::string_view text_;
  const StreamRegistry& registry_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_comment_line(std::string_view line) {
  if (!line.starts_with('#')) return false;
  if (line.size() == 1) return true;
  const char next = line[1];
  if (next == '(' || std::isdigit(static_cast<unsigned char>(next))) return false;
  return !line.starts_with("#real(");
}

template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t end = text.find('\n');
    fn(trim(text.substr(0, end)), line_no);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

}  // namespace

Formula parse(std::string_view text, const StreamRegistry& registry) {
  return Parser(text, registry).parse_all();
}

std::vector<std::string> formula_lines(std::string_view text) {
  std::vector<std::string> out;
  for_each_line(text, [&out](std::string_view line, std::size_t) {
    if (!line.empty() && !is_comment_line(line)) out.emplace_back(line);
  });
  return out;
}

}  // namespace goedel
