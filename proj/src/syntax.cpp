#include "parasp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace parasp {

bool Term::is_variable() const {
  return !name.empty() && (std::isupper(static_cast<unsigned char>(name[0])) || name[0] == '_');
}

bool Atom::is_ground() const {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

std::string Atom::to_string() const {
  if (args.empty()) return predicate;
  std::string s = predicate + "(";
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) s += ",";
    s += args[k].name;
  }
  return s + ")";
}

Literal Literal::prop(std::string name, bool neg) { return Literal(Atom{std::move(name), {}}, neg); }

std::string Literal::to_string() const { return (negated ? "-" : "") + atom.to_string(); }

const Literal* element_literal(const BodyElement& e) {
  return std::visit(
      [](const auto& x) -> const Literal* {
        using E = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<E, ConstElement>)
          return nullptr;
        else
          return &x.literal;
      },
      e);
}

std::string to_string(const BodyElement& e) {
  if (auto* l = std::get_if<LitElement>(&e)) return l->literal.to_string();
  if (auto* d = std::get_if<DefaultElement>(&e)) return "not " + d->literal.to_string();
  if (auto* c = std::get_if<ConstElement>(&e)) return std::string("#") + to_char(c->value);
  const auto& in = std::get<InspectElement>(e);
  std::string s = in.literal.to_string() + " in {";
  bool first = true;
  for (auto v : in.values.values()) {
    if (!first) s += ",";
    s += to_char(v);
    first = false;
  }
  return s + "}";
}

bool Rule::is_ground() const {
  if (!head.atom.is_ground()) return false;
  for (const auto& c : body)
    for (const auto& e : c)
      if (auto* l = element_literal(e); l && !l->atom.is_ground()) return false;
  return true;
}

std::string Rule::to_string() const {
  std::string s = head.to_string();
  if (!body.empty()) {
    s += " :- ";
    for (std::size_t k = 0; k < body.size(); ++k) {
      if (k) s += "; ";
      for (std::size_t j = 0; j < body[k].size(); ++j) {
        if (j) s += ", ";
        s += parasp::to_string(body[k][j]);
      }
    }
  }
  return s + ".";
}

std::string to_string(Dialect d) {
  switch (d) {
    case Dialect::pure: return "pure";
    case Dialect::normal_asp: return "normal-asp";
    case Dialect::fourql: return "fourql";
    case Dialect::foursp: return "foursp";
    case Dialect::mixed: break;
  }
  return "mixed";
}

bool Program::is_ground() const {
  return std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_ground(); });
}

bool Program::has_default_negation() const {
  for (const auto& r : rules)
    for (const auto& c : r.body)
      for (const auto& e : c)
        if (std::holds_alternative<DefaultElement>(e)) return true;
  return false;
}

bool Program::has_inspection() const {
  for (const auto& r : rules)
    for (const auto& c : r.body)
      for (const auto& e : c)
        if (std::holds_alternative<InspectElement>(e)) return true;
  return false;
}

std::vector<Atom> Program::atoms() const {
  std::set<Atom> seen;
  for (const auto& r : rules) {
    seen.insert(r.head.atom);
    for (const auto& c : r.body)
      for (const auto& e : c)
        if (auto* l = element_literal(e)) seen.insert(l->atom);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Literal> Program::default_literals() const {
  std::set<Literal> seen;
  for (const auto& r : rules)
    for (const auto& c : r.body)
      for (const auto& e : c)
        if (auto* d = std::get_if<DefaultElement>(&e)) seen.insert(d->literal);
  return {seen.begin(), seen.end()};
}

std::string Program::to_string() const {
  std::string s;
  for (const auto& r : rules) s += r.to_string() + "\n";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << l.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << r.to_string(); }

}  // namespace parasp
