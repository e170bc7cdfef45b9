#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "parasp/hypotheses.hpp"
#include "parasp/syntax.hpp"
#include "parasp/truth.hpp"

namespace parasp {

/// A finite set of ground classical literals. Iteration is in canonical (sorted) order.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::initializer_list<Literal> lits) : lits_(lits) {}
  explicit Interpretation(std::set<Literal> lits) : lits_(std::move(lits)) {}

  bool contains(const Literal& l) const { return lits_.count(l) != 0; }
  void insert(const Literal& l) { lits_.insert(l); }
  void insert_pair(const Atom& a) {
    lits_.insert(Literal(a, false));
    lits_.insert(Literal(a, true));
  }
  bool erase(const Literal& l) { return lits_.erase(l) != 0; }

  /// No atom occurs with both signs.
  bool consistent() const;
  /// w^I(a).
  TruthValue value(const Atom& a) const;
  /// Value of a literal, strong negation folded in.
  TruthValue value(const Literal& l) const;

  /// Atoms occurring in the interpretation with either sign.
  std::vector<Atom> atoms() const;
  const std::set<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool subset_of(const Interpretation& o) const;

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  /// `{a, -b, c(x)}`
  std::string to_string() const;

  auto operator<=>(const Interpretation&) const = default;

 private:
  std::set<Literal> lits_;
};

/// w^I(p).
TruthValue valuation(const Interpretation& I, const Atom& p);

/// w^I restricted to the atoms occurring in I.
std::map<Atom, TruthValue> valuation_map(const Interpretation& I);

/// I^w.
Interpretation to_interpretation(const std::map<Atom, TruthValue>& w);

/// Value of a body element.
///
/// Default literals read the hypothesis set when one is given (t, f, or i when both assumptions
/// are held) and otherwise use four-valued default negation of the literal's value. Inspections
/// are always two-valued. Throws HypothesisError for a default literal not covered by `h`.
TruthValue eval_element(const Interpretation& I, const BodyElement& e, const Logic& logic,
                        const HypothesisSet* h = nullptr);

/// Disjunction (lub) over conjuncts of conjunction (glb) over elements; the empty body is t.
TruthValue eval_body(const Interpretation& I, const std::vector<Conjunct>& body, const Logic& logic,
                     const HypothesisSet* h = nullptr);

/// Every rule, read as `body -> head`, takes a designated value.
///
/// Logics without i in their carrier (K3+) additionally require I to be consistent.
bool is_model(const Interpretation& I, const Program& p, const Logic& logic,
              const HypothesisSet* h = nullptr);

}  // namespace parasp
