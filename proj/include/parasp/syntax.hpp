#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "parasp/truth.hpp"

namespace parasp {

/// A constant or a variable. Variables start with an uppercase letter.
struct Term {
  std::string name;

  bool is_variable() const;
  auto operator<=>(const Term&) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  /// `pred(c1,...,cn)`, or just `pred` when there are no arguments.
  std::string to_string() const;
  auto operator<=>(const Atom&) const = default;
};

/// A classical literal: an atom or its strong negation. Ordered by (atom, sign).
struct Literal {
  Atom atom;
  bool negated = false;

  Literal() = default;
  explicit Literal(Atom a, bool neg = false) : atom(std::move(a)), negated(neg) {}

  /// Proposition literal with no arguments, e.g. Literal::prop("p") or prop("p", true) for -p.
  static Literal prop(std::string name, bool neg = false);

  Literal complement() const { return Literal(atom, !negated); }
  std::string to_string() const;
  auto operator<=>(const Literal&) const = default;
};

struct LitElement {
  Literal literal;
  auto operator<=>(const LitElement&) const = default;
};

/// Default negation of a classical literal.
struct DefaultElement {
  Literal literal;
  auto operator<=>(const DefaultElement&) const = default;
};

/// Inspection: two-valued test whether the literal's value lies in `values`.
struct InspectElement {
  Literal literal;
  TruthSet values;
  bool operator==(const InspectElement& o) const {
    return literal == o.literal && values == o.values;
  }
};

struct ConstElement {
  TruthValue value;
  auto operator<=>(const ConstElement&) const = default;
};

using BodyElement = std::variant<LitElement, DefaultElement, InspectElement, ConstElement>;
using Conjunct = std::vector<BodyElement>;

/// The literal an element mentions, or nullptr for truth constants.
const Literal* element_literal(const BodyElement& e);
std::string to_string(const BodyElement& e);

/// `head :- c1 ; c2 ; ... .` with each ci a conjunction. An empty body is a fact.
struct Rule {
  Literal head;
  std::vector<Conjunct> body;

  bool is_fact() const { return body.empty(); }
  bool is_ground() const;
  std::string to_string() const;
  bool operator==(const Rule&) const = default;
};

enum class Dialect { pure, normal_asp, fourql, foursp, mixed };

std::string to_string(Dialect d);

struct Program {
  std::vector<Rule> rules;

  bool is_ground() const;
  bool has_default_negation() const;
  bool has_inspection() const;
  /// All ground atoms mentioned anywhere, sorted.
  std::vector<Atom> atoms() const;
  /// Literals occurring under default negation, sorted and deduplicated.
  std::vector<Literal> default_literals() const;
  std::string to_string() const;
  bool operator==(const Program&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Rule& r);

}  // namespace parasp
