#include "parasp/stratify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "graph.hpp"

namespace parasp {

std::string to_string(ExpressionKind k) { return k == ExpressionKind::defaults ? "D" : "I"; }

namespace {

bool is_kind(const BodyElement& e, ExpressionKind kind) {
  return kind == ExpressionKind::defaults ? std::holds_alternative<DefaultElement>(e)
                                          : std::holds_alternative<InspectElement>(e);
}

struct Edge {
  std::size_t from;
  std::size_t to;
  bool strict;
};

}  // namespace

std::optional<Stratification> find_stratification(const Program& p, ExpressionKind kind,
                                                  StratifyStats* stats_out) {
  StratifyStats stats;
  std::map<Atom, std::size_t> unit;
  for (const auto& r : p.rules) unit.emplace(r.head.atom, unit.size());
  const std::size_t n = unit.size();
  stats.nodes = n;

  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& r : p.rules) {
    std::size_t h = unit.at(r.head.atom);
    for (const auto& c : r.body)
      for (const auto& e : c) {
        const Literal* l = element_literal(e);
        if (!l) continue;
        auto it = unit.find(l->atom);
        if (it == unit.end()) continue;
        edges.push_back({it->second, h, is_kind(e, kind)});
        succ[it->second].push_back(h);
      }
  }
  stats.edges = edges.size();

  std::size_t ncomp = 0;
  auto comp = detail::strongly_connected(succ, ncomp, stats.steps);

  std::vector<std::vector<std::pair<std::size_t, bool>>> comp_in(ncomp);
  for (const auto& e : edges) {
    ++stats.steps;
    if (comp[e.from] == comp[e.to]) {
      if (e.strict) {
        if (stats_out) *stats_out = stats;
        return std::nullopt;
      }
      continue;
    }
    comp_in[comp[e.to]].push_back({comp[e.from], e.strict});
  }
  // Highest component number first is a topological order (sources before sinks).
  std::vector<std::size_t> rank(ncomp, 0);
  for (std::size_t c = ncomp; c-- > 0;)
    for (auto [src, strict] : comp_in[c]) {
      ++stats.steps;
      rank[c] = std::max(rank[c], rank[src] + (strict ? 1 : 0));
    }

  std::set<std::size_t> used;
  for (const auto& r : p.rules) used.insert(rank[comp[unit.at(r.head.atom)]]);
  std::map<std::size_t, std::size_t> dense;
  for (auto k : used) dense.emplace(k, dense.size());

  Stratification s;
  s.kind = kind;
  s.strata.resize(dense.size());
  for (std::size_t k = 0; k < p.rules.size(); ++k)
    s.strata[dense.at(rank[comp[unit.at(p.rules[k].head.atom)]])].push_back(k);
  if (stats_out) *stats_out = stats;
  return s;
}

bool validate_stratification(const Program& p, const Stratification& s) {
  std::vector<std::size_t> stratum_of(p.rules.size(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < s.strata.size(); ++k)
    for (auto r : s.strata[k]) {
      if (r >= p.rules.size())
        throw std::out_of_range("stratum " + std::to_string(k + 1) + " lists rule " +
                                std::to_string(r) + " but the program has " +
                                std::to_string(p.rules.size()) + " rules");
      if (stratum_of[r] != static_cast<std::size_t>(-1)) return false;
      stratum_of[r] = k;
    }
  for (auto k : stratum_of)
    if (k == static_cast<std::size_t>(-1)) return false;

  std::map<Atom, std::size_t> defined_in;
  for (std::size_t r = 0; r < p.rules.size(); ++r) {
    auto [it, fresh] = defined_in.emplace(p.rules[r].head.atom, stratum_of[r]);
    if (!fresh && it->second != stratum_of[r]) return false;
  }
  for (std::size_t r = 0; r < p.rules.size(); ++r)
    for (const auto& c : p.rules[r].body)
      for (const auto& e : c) {
        const Literal* l = element_literal(e);
        if (!l) continue;
        auto it = defined_in.find(l->atom);
        if (it == defined_in.end()) continue;
        bool strict = is_kind(e, s.kind);
        if (strict ? it->second >= stratum_of[r] : it->second > stratum_of[r]) return false;
      }
  return true;
}

std::vector<Atom> defined_atoms(const Program& p, const Stratification& s, std::size_t stratum) {
  std::set<Atom> out;
  for (auto r : s.strata.at(stratum)) out.insert(p.rules.at(r).head.atom);
  return {out.begin(), out.end()};
}

}  // namespace parasp
