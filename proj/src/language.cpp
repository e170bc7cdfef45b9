#include "parasp/language.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parasp {

namespace {

void collect_vars(const Literal& l, std::vector<std::string>& order, std::set<std::string>& seen) {
  for (const auto& t : l.atom.args)
    if (t.is_variable() && seen.insert(t.name).second) order.push_back(t.name);
}

void collect_constants(const Literal& l, std::set<std::string>& out) {
  for (const auto& t : l.atom.args)
    if (!t.is_variable()) out.insert(t.name);
}

std::vector<std::string> rule_variables(const Rule& r) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  collect_vars(r.head, order, seen);
  for (const auto& c : r.body)
    for (const auto& e : c)
      if (auto* l = element_literal(e)) collect_vars(*l, order, seen);
  return order;
}

void check_safety(const Rule& r, std::size_t index) {
  auto unsafe = [&](const std::string& var) {
    throw GroundingError("unsafe rule " + std::to_string(index) + " (" + r.to_string() +
                             "): variable " + var + " is not bound by a classical body literal",
                         index);
  };
  std::set<std::string> head_vars;
  for (const auto& t : r.head.atom.args)
    if (t.is_variable()) head_vars.insert(t.name);
  if (r.body.empty()) {
    if (!head_vars.empty()) unsafe(*head_vars.begin());
    return;
  }
  for (const auto& c : r.body) {
    std::set<std::string> bound;
    for (const auto& e : c)
      if (auto* l = std::get_if<LitElement>(&e))
        for (const auto& t : l->literal.atom.args)
          if (t.is_variable()) bound.insert(t.name);
    for (const auto& v : head_vars)
      if (!bound.count(v)) unsafe(v);
    for (const auto& e : c) {
      if (std::holds_alternative<LitElement>(e) || std::holds_alternative<ConstElement>(e)) continue;
      for (const auto& t : element_literal(e)->atom.args)
        if (t.is_variable() && !bound.count(t.name)) unsafe(t.name);
    }
  }
}

Literal substitute(const Literal& l, const std::map<std::string, std::string>& sigma) {
  Literal out = l;
  for (auto& t : out.atom.args)
    if (t.is_variable()) t.name = sigma.at(t.name);
  return out;
}

BodyElement substitute(const BodyElement& e, const std::map<std::string, std::string>& sigma) {
  return std::visit(
      [&](const auto& x) -> BodyElement {
        using E = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<E, ConstElement>) {
          return x;
        } else {
          E copy = x;
          copy.literal = substitute(x.literal, sigma);
          return copy;
        }
      },
      e);
}

}  // namespace

Program ground(const Program& p) {
  std::set<std::string> constant_set;
  bool any_vars = false;
  for (std::size_t k = 0; k < p.rules.size(); ++k) {
    const auto& r = p.rules[k];
    collect_constants(r.head, constant_set);
    for (const auto& c : r.body)
      for (const auto& e : c)
        if (auto* l = element_literal(e)) collect_constants(*l, constant_set);
    if (!r.is_ground()) {
      check_safety(r, k);
      any_vars = true;
    }
  }
  std::vector<std::string> constants(constant_set.begin(), constant_set.end());
  if (any_vars && constants.empty())
    throw GroundingError("program has variables but mentions no constants", 0);

  Program out;
  for (const auto& r : p.rules) {
    auto vars = rule_variables(r);
    if (vars.empty()) {
      out.rules.push_back(r);
      continue;
    }
    std::vector<std::size_t> choice(vars.size(), 0);
    for (;;) {
      std::map<std::string, std::string> sigma;
      for (std::size_t k = 0; k < vars.size(); ++k) sigma[vars[k]] = constants[choice[k]];
      Rule g;
      g.head = substitute(r.head, sigma);
      for (const auto& c : r.body) {
        Conjunct gc;
        gc.reserve(c.size());
        for (const auto& e : c) gc.push_back(substitute(e, sigma));
        g.body.push_back(std::move(gc));
      }
      out.rules.push_back(std::move(g));
      // Odometer over constants, last variable fastest.
      std::size_t k = vars.size();
      while (k > 0 && ++choice[k - 1] == constants.size()) choice[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

std::vector<std::size_t> guard_violations(const Program& p) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < p.rules.size(); ++k) {
    for (const auto& c : p.rules[k].body) {
      bool has_default = false, has_guard = false;
      for (const auto& e : c) {
        if (std::holds_alternative<DefaultElement>(e))
          has_default = true;
        else
          has_guard = true;
      }
      if (has_default && !has_guard) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

bool has_asp_syntax(const Program& p) {
  for (const auto& r : p.rules) {
    if (r.body.size() > 1) return false;
    for (const auto& c : r.body)
      for (const auto& e : c) {
        if (std::holds_alternative<InspectElement>(e)) return false;
        if (auto* k = std::get_if<ConstElement>(&e); k && k->value == TruthValue::i) return false;
      }
  }
  return true;
}

Dialect classify_dialect(const Program& p) {
  bool def = p.has_default_negation();
  bool insp = p.has_inspection();
  if (!def && !insp) return Dialect::pure;
  if (def && insp) return Dialect::mixed;
  if (insp) return Dialect::fourql;
  if (has_asp_syntax(p) && guard_violations(p).empty()) return Dialect::normal_asp;
  return Dialect::foursp;
}

Program defaults_to_inspections(const Program& p) {
  Program out = p;
  for (auto& r : out.rules)
    for (auto& c : r.body)
      for (auto& e : c)
        if (auto* d = std::get_if<DefaultElement>(&e))
          e = InspectElement{d->literal, TruthSet{TruthValue::f, TruthValue::u}};
  return out;
}

}  // namespace parasp
