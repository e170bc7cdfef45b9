#include "least.hpp"

#include <stdexcept>

namespace parasp::detail {

LeastClosure::LeastClosure(const CompiledProgram& cp) : cp_(cp) {
  occurrences_.resize(cp.literal_count());
  rule_conjuncts_.resize(cp.rules().size());
  for (std::size_t r = 0; r < cp.rules().size(); ++r) {
    for (const auto& c : cp.rules()[r].body) {
      std::size_t id = conjuncts_.size();
      Conj cj{r, 0, false};
      std::vector<LitId> defaults;
      for (const auto& e : c) {
        switch (e.kind) {
          case CompiledElement::Kind::lit:
            ++cj.lit_count;
            occurrences_[e.lit].push_back(id);
            break;
          case CompiledElement::Kind::default_lit:
            defaults.push_back(e.lit);
            break;
          case CompiledElement::Kind::inspect:
            throw std::invalid_argument("inspection operators must be eliminated first");
          case CompiledElement::Kind::constant:
            if (e.value != TruthValue::t) cj.blocked_static = true;
            break;
        }
      }
      conjuncts_.push_back(cj);
      conj_defaults_.push_back(std::move(defaults));
      rule_conjuncts_[r].push_back(id);
    }
  }
}

LiteralSet LeastClosure::run(const std::vector<std::uint8_t>* disabled_rules,
                             const std::vector<std::uint8_t>* default_holds,
                             std::size_t& work) const {
  const auto& rules = cp_.rules();
  LiteralSet out(cp_.literal_count());
  std::vector<std::uint32_t> missing(conjuncts_.size());
  std::vector<char> dead(conjuncts_.size(), 0);
  std::vector<LitId> queue;

  auto enabled = [&](std::size_t r) { return !disabled_rules || !(*disabled_rules)[r]; };
  auto derive = [&](LitId l) {
    ++work;
    if (out.insert(l)) queue.push_back(l);
  };

  for (std::size_t r = 0; r < rules.size(); ++r)
    if (enabled(r) && rules[r].body.empty()) derive(rules[r].head);
  for (std::size_t c = 0; c < conjuncts_.size(); ++c) {
    const auto& cj = conjuncts_[c];
    missing[c] = cj.lit_count;
    bool blocked = cj.blocked_static || !enabled(cj.rule);
    for (LitId d : conj_defaults_[c]) {
      ++work;
      if (!default_holds || !(*default_holds)[d]) blocked = true;
    }
    dead[c] = blocked;
    if (!blocked && missing[c] == 0) derive(rules[cj.rule].head);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t c : occurrences_[queue[q]]) {
      ++work;
      if (dead[c]) continue;
      if (--missing[c] == 0) derive(rules[conjuncts_[c].rule].head);
    }
  }
  return out;
}

}  // namespace parasp::detail
