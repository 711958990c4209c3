#include "goedel/parser.hpp"

namespace goedel {

namespace {

class Printer {
 public:
  explicit Printer(std::size_t depth) : depth_(depth) {}

  std::string operator()(const Formula& phi) {
    switch (phi.kind()) {
      case Connective::Bottom:
        return "_|_";
      case Connective::Atom:
        return "p" + std::to_string(phi.atom());
      case Connective::RatConst:
        return "#(" + phi.constant().value().to_string() + ")";
      case Connective::RealConst:
        if (phi.digits().named()) return "#real(" + phi.digits().name() + ")";
        reparseable = false;
        return "#real(<0." + phi.digits().prefix(depth_) + "...>)";
      case Connective::Implies:
        return wrap_if(phi.lhs(), phi.lhs().kind() == Connective::Implies) + " -> " +
               (*this)(phi.rhs());
      case Connective::Conj:
        return wrap_if(phi.lhs(), phi.lhs().kind() == Connective::Implies) + " & " +
               wrap_if(phi.rhs(), phi.rhs().kind() == Connective::Implies ||
                                      phi.rhs().kind() == Connective::Conj);
      case Connective::CountConj:
        return "/\\[" + stream(phi.stream()) + "]";
      case Connective::CountDisj:
        return "\\/[" + stream(phi.stream()) + "]";
    }
    return {};
  }

  bool reparseable = true;

 private:
  std::string wrap_if(const Formula& phi, bool parens) {
    return parens ? "(" + (*this)(phi) + ")" : (*this)(phi);
  }

  std::string stream(const FormulaStream& s) {
    if (s.named()) return s.name();
    reparseable = false;
    std::string out = "<";
    for (std::size_t i = 0; i < depth_; ++i) {
      if (i > 0) out += ", ";
      out += (*this)(s.at(i));
    }
    return out + "; " + std::to_string(depth_) + " shown>";
  }

  std::size_t depth_;
};

}  // namespace

Rendering render(const Formula& phi, std::size_t depth) {
  Printer printer(depth);
  std::string text = printer(phi);
  return {std::move(text), printer.reparseable};
}

}  // namespace goedel
