#include <algorithm>
#include <map>
#include <set>

#include "graph.hpp"
#include "parasp/wsm.hpp"

namespace parasp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

DependencyGraph dependency_graph(const Program& p) {
  std::set<Literal> lits;
  for (const auto& r : p.rules) {
    lits.insert(r.head);
    for (const auto& c : r.body)
      for (const auto& e : c)
        if (const Literal* l = element_literal(e)) lits.insert(*l);
  }
  DependencyGraph g;
  g.vertices.assign(lits.begin(), lits.end());
  std::map<Literal, std::size_t> index;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) index.emplace(g.vertices[k], k);
  g.succ.resize(g.vertices.size());
  for (const auto& r : p.rules) {
    auto& out = g.succ[index.at(r.head)];
    for (const auto& c : r.body)
      for (const auto& e : c)
        if (const Literal* l = element_literal(e)) out.push_back(index.at(*l));
  }
  for (auto& out : g.succ) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return g;
}

namespace {

// Every member reaches every other member (and itself, for singletons) inside the subset.
bool strongly_connected_subset(const DependencyGraph& g, const std::vector<std::size_t>& members) {
  if (members.size() == 1) {
    const auto& out = g.succ[members[0]];
    return std::binary_search(out.begin(), out.end(), members[0]);
  }
  std::set<std::size_t> in(members.begin(), members.end());
  auto reach_all = [&](bool forward) {
    std::set<std::size_t> seen{members[0]};
    std::vector<std::size_t> stack{members[0]};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : members) {
        if (seen.count(w)) continue;
        const auto& out = forward ? g.succ[v] : g.succ[w];
        std::size_t target = forward ? w : v;
        if (std::binary_search(out.begin(), out.end(), target)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    return seen.size() == in.size();
  };
  return reach_all(true) && reach_all(false);
}

bool has_literal_in(const Conjunct& c, const std::set<Literal>& L) {
  for (const auto& e : c)
    if (const Literal* l = element_literal(e); l && L.count(*l)) return true;
  return false;
}

// Body value of a rule in R-(L): a fact, or a rule with some disjunct avoiding the loop.
// Rules with no such disjunct contribute f.
TruthValue external_value(const Interpretation& I, const Rule& r, const std::set<Literal>& L) {
  if (r.body.empty()) return TruthValue::t;
  for (const auto& c : r.body)
    if (!has_literal_in(c, L)) return eval_body(I, r.body, Logic::l4());
  return TruthValue::f;
}

struct LoopSupport {
  std::vector<Literal> members;
  std::set<Literal> set;
  std::vector<const Rule*> rules;        // head in the loop
  std::vector<const Rule*> complements;  // head complements a loop member
};

bool loop_supported(const Interpretation& I, const LoopSupport& loop) {
  bool any_t = false, active = false;
  for (const auto& l : loop.members) {
    TruthValue v = I.value(l);
    any_t |= v == TruthValue::t;
    active |= v == TruthValue::t || v == TruthValue::i;
  }
  if (!active) return true;
  TruthValue direct = TruthValue::f, any = TruthValue::f;
  for (const Rule* r : loop.rules) direct = std::max(direct, external_value(I, *r, loop.set));
  for (const Rule* r : loop.complements) any = std::max(any, external_value(I, *r, loop.set));
  any = std::max(any, direct);
  if (any_t && direct != TruthValue::t) return false;
  return any == TruthValue::t || any == TruthValue::i;
}

}  // namespace

std::optional<std::vector<std::vector<Literal>>> find_loops(const Program& p,
                                                            std::size_t scc_cap) {
  DependencyGraph g = dependency_graph(p);
  std::size_t ncomp = 0, steps = 0;
  auto comp = detail::strongly_connected(g.succ, ncomp, steps);
  std::vector<std::vector<std::size_t>> members(ncomp);
  for (std::size_t v = 0; v < comp.size(); ++v) members[comp[v]].push_back(v);

  std::vector<std::vector<Literal>> loops;
  for (const auto& scc : members) {
    if (scc.size() > scc_cap) return std::nullopt;
    const std::uint32_t subsets = std::uint32_t{1} << scc.size();
    for (std::uint32_t m = 1; m < subsets; ++m) {
      std::vector<std::size_t> pick;
      for (std::size_t k = 0; k < scc.size(); ++k)
        if ((m >> k) & 1) pick.push_back(scc[k]);
      if (!strongly_connected_subset(g, pick)) continue;
      std::vector<Literal> loop;
      for (auto v : pick) loop.push_back(g.vertices[v]);
      loops.push_back(std::move(loop));
    }
  }
  std::sort(loops.begin(), loops.end());
  return loops;
}

Verdict check_well_supported(const Program& p, const Interpretation& I,
                             const WellSupportedOptions& opts) {
  if (!p.is_ground()) throw EngineError("program must be ground");
  if (p.has_default_negation() || p.has_inspection())
    throw EngineError("well-supportedness is checked on pure programs");
  const Logic logic = Logic::l4();
  if (!is_model(I, p, logic)) return Verdict::no;
  auto loops = find_loops(p, opts.scc_cap);
  if (!loops) return Verdict::unknown;

  std::vector<LoopSupport> support;
  for (auto& members : *loops) {
    LoopSupport ls;
    ls.set.insert(members.begin(), members.end());
    ls.members = std::move(members);
    for (const auto& r : p.rules)
      if (ls.set.count(r.head)) ls.rules.push_back(&r);
      else if (ls.set.count(r.head.complement())) ls.complements.push_back(&r);
    support.push_back(std::move(ls));
  }
  auto supported = [&](const Interpretation& J) {
    for (const auto& ls : support)
      if (!loop_supported(J, ls)) return false;
    return true;
  };
  if (!supported(I)) return Verdict::no;

  if (I.size() > opts.minimality_cap) return Verdict::unknown;
  std::vector<Literal> lits(I.begin(), I.end());
  const std::uint64_t full = (std::uint64_t{1} << lits.size()) - 1;
  for (std::uint64_t m = 0; m < full; ++m) {
    std::set<Literal> sub;
    for (std::size_t k = 0; k < lits.size(); ++k)
      if ((m >> k) & 1) sub.insert(sub.end(), lits[k]);
    Interpretation J(std::move(sub));
    if (is_model(J, p, logic) && supported(J)) return Verdict::no;
  }
  return Verdict::yes;
}

}  // namespace parasp
