#include "parasp/compiled.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace parasp {

CompiledProgram::CompiledProgram(const Program& p, std::span<const Atom> extra_atoms) {
  if (!p.is_ground()) throw std::invalid_argument("program must be ground");
  std::set<Atom> all;
  for (const auto& a : p.atoms()) all.insert(a);
  for (const auto& a : extra_atoms) all.insert(a);
  atoms_.assign(all.begin(), all.end());
  for (AtomId k = 0; k < atoms_.size(); ++k) index_.emplace(atoms_[k], k);
  mentions_.resize(atoms_.size());

  std::set<LitId> defaults;
  rules_.reserve(p.rules.size());
  for (std::size_t r = 0; r < p.rules.size(); ++r) {
    const auto& rule = p.rules[r];
    CompiledRule cr;
    cr.head = lit(rule.head);
    std::vector<AtomId> mentioned;
    for (const auto& c : rule.body) {
      std::vector<CompiledElement> cc;
      cc.reserve(c.size());
      for (const auto& e : c) {
        CompiledElement ce{};
        if (auto* l = std::get_if<LitElement>(&e)) {
          ce.kind = CompiledElement::Kind::lit;
          ce.lit = lit(l->literal);
        } else if (auto* d = std::get_if<DefaultElement>(&e)) {
          ce.kind = CompiledElement::Kind::default_lit;
          ce.lit = lit(d->literal);
          defaults.insert(ce.lit);
        } else if (auto* in = std::get_if<InspectElement>(&e)) {
          ce.kind = CompiledElement::Kind::inspect;
          ce.lit = lit(in->literal);
          ce.values = in->values;
          has_inspection_ = true;
        } else {
          ce.kind = CompiledElement::Kind::constant;
          ce.value = std::get<ConstElement>(e).value;
        }
        if (ce.kind != CompiledElement::Kind::constant) mentioned.push_back(atom_of(ce.lit));
        cc.push_back(ce);
      }
      cr.body.push_back(std::move(cc));
    }
    std::sort(mentioned.begin(), mentioned.end());
    mentioned.erase(std::unique(mentioned.begin(), mentioned.end()), mentioned.end());
    for (auto a : mentioned) mentions_[a].push_back(r);
    rules_.push_back(std::move(cr));
  }
  default_lits_.assign(defaults.begin(), defaults.end());
}

LitId CompiledProgram::lit(const Literal& l) const {
  auto it = index_.find(l.atom);
  if (it == index_.end()) throw std::out_of_range("unknown atom " + l.atom.to_string());
  return lit_id(it->second, l.negated);
}

Interpretation to_interpretation(const CompiledProgram& cp, const LiteralSet& s) {
  std::set<Literal> lits;
  for (LitId l = 0; l < cp.literal_count(); ++l)
    if (s.contains(l)) lits.insert(lits.end(), cp.literal(l));
  return Interpretation(std::move(lits));
}

LiteralSet to_literal_set(const CompiledProgram& cp, const Interpretation& I) {
  LiteralSet s(cp.literal_count());
  for (const auto& l : I) s.insert(cp.lit(l));
  return s;
}

HypothesisState to_hypothesis_state(const CompiledProgram& cp, const HypothesisSet& h) {
  HypothesisState st(cp.literal_count(), 0);
  for (const auto& [l, a] : h.entries) st[cp.lit(l)] = a.mask();
  return st;
}

HypothesisSet to_hypothesis_set(const CompiledProgram& cp, const HypothesisState& h) {
  HypothesisSet out;
  for (LitId l = 0; l < h.size(); ++l)
    if (h[l]) out.entries.emplace_hint(out.entries.end(), cp.literal(l), Assumptions::from_mask(h[l]));
  return out;
}

}  // namespace parasp
