#include "parasp/semantics.hpp"

#include <algorithm>

namespace parasp {

bool Interpretation::consistent() const {
  for (const auto& l : lits_)
    if (!l.negated && lits_.count(l.complement())) return false;
  return true;
}

TruthValue Interpretation::value(const Atom& a) const {
  bool pos = lits_.count(Literal(a, false)) != 0;
  bool neg = lits_.count(Literal(a, true)) != 0;
  if (pos) return neg ? TruthValue::i : TruthValue::t;
  return neg ? TruthValue::f : TruthValue::u;
}

TruthValue Interpretation::value(const Literal& l) const {
  TruthValue v = value(l.atom);
  return l.negated ? strong_neg(v) : v;
}

std::vector<Atom> Interpretation::atoms() const {
  std::vector<Atom> out;
  for (const auto& l : lits_)
    if (out.empty() || out.back() != l.atom) out.push_back(l.atom);
  return out;
}

bool Interpretation::subset_of(const Interpretation& o) const {
  return std::includes(o.lits_.begin(), o.lits_.end(), lits_.begin(), lits_.end());
}

std::string Interpretation::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& l : lits_) {
    if (!first) s += ", ";
    s += l.to_string();
    first = false;
  }
  return s + "}";
}

TruthValue valuation(const Interpretation& I, const Atom& p) { return I.value(p); }

std::map<Atom, TruthValue> valuation_map(const Interpretation& I) {
  std::map<Atom, TruthValue> w;
  for (const auto& a : I.atoms()) w[a] = I.value(a);
  return w;
}

Interpretation to_interpretation(const std::map<Atom, TruthValue>& w) {
  Interpretation I;
  for (const auto& [a, v] : w) {
    if (v == TruthValue::t || v == TruthValue::i) I.insert(Literal(a, false));
    if (v == TruthValue::f || v == TruthValue::i) I.insert(Literal(a, true));
  }
  return I;
}

TruthValue eval_element(const Interpretation& I, const BodyElement& e, const Logic& logic,
                        const HypothesisSet* h) {
  (void)logic;
  if (auto* l = std::get_if<LitElement>(&e)) return I.value(l->literal);
  if (auto* c = std::get_if<ConstElement>(&e)) return c->value;
  if (auto* in = std::get_if<InspectElement>(&e))
    return in->values.contains(I.value(in->literal)) ? TruthValue::t : TruthValue::f;
  const auto& d = std::get<DefaultElement>(e);
  if (!h) return default_neg(I.value(d.literal));
  const Assumptions* a = h->find(d.literal);
  if (!a || a->empty())
    throw HypothesisError("no hypothesis for not " + d.literal.to_string());
  return a->value();
}

TruthValue eval_body(const Interpretation& I, const std::vector<Conjunct>& body, const Logic& logic,
                     const HypothesisSet* h) {
  if (body.empty()) return TruthValue::t;
  const auto ord = logic.ordering;
  TruthValue result = TruthValue::f;
  for (const auto& c : body) {
    TruthValue cv = TruthValue::t;
    for (const auto& e : c) cv = conj(cv, eval_element(I, e, logic, h), ord);
    result = disj(result, cv, ord);
  }
  return result;
}

bool is_model(const Interpretation& I, const Program& p, const Logic& logic, const HypothesisSet* h) {
  if (!logic.carrier().contains(TruthValue::i) && !I.consistent()) return false;
  for (const auto& r : p.rules) {
    TruthValue b = eval_body(I, r.body, logic, h);
    if (!logic.is_designated(implies(b, I.value(r.head)))) return false;
  }
  return true;
}

}  // namespace parasp
