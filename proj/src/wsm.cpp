#include "parasp/wsm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "least.hpp"
#include "parasp/compiled.hpp"

namespace parasp {

namespace {

constexpr std::uint8_t kT = Assumptions::kTrue;
constexpr std::uint8_t kF = Assumptions::kFalse;

// Values are ordered f < u < i < t as in the L ordering, so glb/lub are min/max.
TruthValue element_value(const CompiledElement& e, const LiteralSet& K, const HypothesisState* h) {
  switch (e.kind) {
    case CompiledElement::Kind::lit:
      return K.value(e.lit);
    case CompiledElement::Kind::default_lit:
      return h ? Assumptions::from_mask((*h)[e.lit]).value() : default_neg(K.value(e.lit));
    case CompiledElement::Kind::inspect:
      return e.values.contains(K.value(e.lit)) ? TruthValue::t : TruthValue::f;
    case CompiledElement::Kind::constant:
      return e.value;
  }
  return TruthValue::f;
}

TruthValue body_value(const CompiledRule& r, const LiteralSet& K, const HypothesisState* h,
                      std::size_t& work) {
  ++work;
  if (r.body.empty()) return TruthValue::t;
  TruthValue best = TruthValue::f;
  for (const auto& c : r.body) {
    TruthValue v = TruthValue::t;
    for (const auto& e : c) v = std::min(v, element_value(e, K, h));
    best = std::max(best, v);
    if (best == TruthValue::t) break;
  }
  return best;
}

// Worklist form of the correction loop: a rule is re-examined whenever an atom it mentions
// becomes inconsistent.
LiteralSet correction(const CompiledProgram& cp, const LiteralSet& I, const HypothesisState* h,
                      std::size_t& work) {
  const auto& rules = cp.rules();
  LiteralSet J(cp.literal_count());
  LiteralSet K = I;
  std::vector<std::size_t> queue(rules.size());
  std::vector<char> queued(rules.size(), 1);
  for (std::size_t r = 0; r < rules.size(); ++r) queue[r] = r;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t r = queue[q];
    queued[r] = 0;
    AtomId a = atom_of(rules[r].head);
    if (K.atom_value(a) == TruthValue::i) continue;
    if (body_value(rules[r], K, h, work) != TruthValue::i) continue;
    for (LitId l : {lit_id(a, false), lit_id(a, true)}) {
      J.insert(l);
      K.insert(l);
    }
    for (std::size_t s : cp.rules_mentioning(a))
      if (!queued[s]) {
        queued[s] = 1;
        queue.push_back(s);
      }
  }
  return J;
}

void interlace_state(LiteralSet& I, HypothesisState& h) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (LitId l = 0; l < h.size(); ++l) {
      if (!h[l]) continue;
      if (I.contains(l) && !(h[l] & kF)) {
        h[l] |= kF;
        changed = true;
      }
      if (h[l] == (kT | kF)) {
        changed |= I.insert(l);
        changed |= I.insert(complement(l));
      } else if (h[l] == kF) {
        changed |= I.insert(l);
      }
    }
  }
}

struct Prepared {
  explicit Prepared(Program prog) : program(std::move(prog)), cp(program), closure(cp) {}
  Program program;
  CompiledProgram cp;
  detail::LeastClosure closure;
};

// The Inc loop. With hypotheses, the derived set is interlaced with them before correction.
LiteralSet run_engine(const Prepared& pr, HypothesisState* h, EngineStats& stats) {
  const auto& cp = pr.cp;
  const auto& rules = cp.rules();
  LiteralSet inc(cp.literal_count());
  std::vector<std::uint8_t> disabled(rules.size(), 0);
  std::vector<std::uint8_t> holds(cp.literal_count(), 0);
  const std::size_t max_rounds = cp.atom_count() + 2;
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) throw std::logic_error("model generation failed to converge");
    ++stats.iterations;
    for (std::size_t r = 0; r < rules.size(); ++r) disabled[r] = inc.contains(rules[r].head);
    if (h)
      for (LitId l : cp.default_literals()) holds[l] = (*h)[l] == kT;
    LiteralSet I = pr.closure.run(&disabled, h ? &holds : nullptr, stats.body_evaluations);
    I.insert_all(inc);
    if (h) {
      // A hypothesis `not l <- f` stands only while l is derived true.
      for (LitId l : cp.default_literals())
        if ((*h)[l] == kF && I.value(l) != TruthValue::t) (*h)[l] |= kT;
      interlace_state(I, *h);
    }
    LiteralSet J = correction(cp, I, h, stats.body_evaluations);
    if (J.size() == 0) return I;
    LiteralSet next = J;
    for (AtomId a = 0; a < cp.atom_count(); ++a)
      if (I.atom_value(a) == TruthValue::i) {
        next.insert(lit_id(a, false));
        next.insert(lit_id(a, true));
      }
    inc = std::move(next);
  }
}

HypothesisState state_for(const CompiledProgram& cp, const HypothesisSet& h) {
  HypothesisState st(cp.literal_count(), 0);
  for (LitId l : cp.default_literals()) {
    const Assumptions* a = h.find(cp.literal(l));
    if (!a || a->empty()) throw EngineError("no hypothesis for not " + cp.literal(l).to_string());
    st[l] = a->mask();
  }
  return st;
}

struct RunOutput {
  Interpretation model;
  HypothesisSet final_h;
};

RunOutput run_once(const Prepared& pr, const HypothesisSet* h, EngineStats& stats) {
  RunOutput out;
  if (!h) {
    out.model = to_interpretation(pr.cp, run_engine(pr, nullptr, stats));
    return out;
  }
  HypothesisState st = state_for(pr.cp, *h);
  out.model = to_interpretation(pr.cp, run_engine(pr, &st, stats));
  out.final_h = *h;
  for (LitId l : pr.cp.default_literals())
    out.final_h.entries[pr.cp.literal(l)] = Assumptions::from_mask(st[l]);
  return out;
}

// Inspections of each stratum are replaced using the model of the strata below it.
RunOutput run_stratified(const Program& p, const Stratification& s, const HypothesisSet* h,
                         EngineStats& stats) {
  RunOutput out;
  if (h) out.final_h = *h;
  Program running;
  stats.strata = s.strata.size();
  for (const auto& stratum : s.strata) {
    for (auto r : stratum) {
      Rule rule = p.rules[r];
      for (auto& c : rule.body)
        for (auto& e : c)
          if (auto* in = std::get_if<InspectElement>(&e))
            e = ConstElement{in->values.contains(out.model.value(in->literal)) ? TruthValue::t
                                                                                : TruthValue::f};
      running.rules.push_back(std::move(rule));
    }
    Prepared pr(running);
    out = run_once(pr, h, stats);
  }
  return out;
}

void require_ground(const Program& p) {
  if (!p.is_ground()) throw EngineError("program must be ground");
}

Stratification inspection_strata(const Program& p) {
  auto s = find_stratification(p, ExpressionKind::inspections);
  if (!s) throw EngineError("program is not stratifiable with respect to inspections");
  return *s;
}

}  // namespace

Interpretation find_correction(const Program& p, const Interpretation& I) {
  require_ground(p);
  auto atoms = I.atoms();
  CompiledProgram cp(p, atoms);
  std::size_t work = 0;
  return to_interpretation(cp, correction(cp, to_literal_set(cp, I), nullptr, work));
}

Interpretation generate_wsm_4ql(const Program& p, EngineStats* stats) {
  require_ground(p);
  if (p.has_default_negation())
    throw EngineError("4QL programs use inspections instead of 'not'; solve in 4sp mode");
  EngineStats local;
  Interpretation model;
  if (p.has_inspection()) {
    model = run_stratified(p, inspection_strata(p), nullptr, local).model;
  } else {
    Prepared pr(p);
    model = run_once(pr, nullptr, local).model;
  }
  if (stats) *stats = local;
  return model;
}

Interpretation eliminate_inspections(const Program& p, const Stratification& s,
                                     EngineStats* stats) {
  require_ground(p);
  if (p.has_default_negation()) throw EngineError("program contains default negation");
  bool valid = false;
  try {
    valid = s.kind == ExpressionKind::inspections && validate_stratification(p, s);
  } catch (const std::out_of_range& e) {
    throw EngineError(e.what());
  }
  if (!valid) throw EngineError("not a valid stratification with respect to inspections");
  EngineStats local;
  auto model = run_stratified(p, s, nullptr, local).model;
  if (stats) *stats = local;
  return model;
}

std::pair<Interpretation, HypothesisSet> interlace(const Interpretation& I,
                                                   const HypothesisSet& h) {
  Interpretation J = I;
  HypothesisSet H = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [l, a] : H.entries) {
      if (J.contains(l) && !a.has_false()) {
        a.add(Assumptions::assume_false());
        changed = true;
      }
      if (a.contradicted()) {
        if (!J.contains(l) || !J.contains(l.complement())) {
          J.insert(l);
          J.insert(l.complement());
          changed = true;
        }
      } else if (a.has_false() && !J.contains(l)) {
        J.insert(l);
        changed = true;
      }
    }
  }
  return {std::move(J), std::move(H)};
}

Wsm4spResult generate_wsm_4sp(const Program& p, const HypothesisSet& h) {
  require_ground(p);
  Wsm4spResult res;
  res.initial = h;
  RunOutput out;
  if (p.has_inspection()) {
    out = run_stratified(p, inspection_strata(p), &h, res.stats);
  } else {
    Prepared pr(p);
    out = run_once(pr, &h, res.stats);
  }
  res.model = std::move(out.model);
  res.final_hypotheses = std::move(out.final_h);
  res.contradicted = res.final_hypotheses.contradicted();
  res.generators.push_back(h);
  return res;
}

HypothesisSet lex_hypotheses(const Program& p, std::uint64_t k) {
  auto lits = p.default_literals();
  HypothesisSet h;
  const std::size_t n = lits.size();
  for (std::size_t j = 0; j < n; ++j) {
    bool assumed_false = n - 1 - j < 64 && ((k >> (n - 1 - j)) & 1);
    h.entries.emplace(lits[j], assumed_false ? Assumptions::assume_false()
                                             : Assumptions::assume_true());
  }
  return h;
}

std::vector<Wsm4spResult> enumerate_4sp_models(const Program& p, const EnumerationOptions& opts) {
  require_ground(p);
  const std::size_t n = p.default_literals().size();
  if (opts.strategy == Strategy::exhaustive && n > opts.exhaustive_bound)
    throw EngineError("exhaustive enumeration over " + std::to_string(n) +
                      " default literals exceeds the bound of " +
                      std::to_string(opts.exhaustive_bound));
  if (n > 62) throw EngineError("too many default literals to enumerate hypothesis sets");
  const std::uint64_t total = std::uint64_t{1} << n;

  std::unique_ptr<Prepared> pr;
  if (!p.has_inspection()) pr = std::make_unique<Prepared>(p);
  std::optional<Stratification> strata;
  if (p.has_inspection()) strata = inspection_strata(p);

  std::vector<Wsm4spResult> out;
  std::map<Interpretation, std::size_t> seen_models;
  auto visit = [&](std::uint64_t k) {
    HypothesisSet h = lex_hypotheses(p, k);
    Wsm4spResult res;
    res.initial = h;
    RunOutput ro = pr ? run_once(*pr, &h, res.stats) : run_stratified(p, *strata, &h, res.stats);
    res.model = std::move(ro.model);
    res.final_hypotheses = std::move(ro.final_h);
    res.contradicted = res.final_hypotheses.contradicted();
    res.generators.push_back(h);
    auto it = seen_models.find(res.model);
    if (it != seen_models.end()) {
      out[it->second].generators.push_back(std::move(h));
      return;
    }
    seen_models.emplace(res.model, out.size());
    out.push_back(std::move(res));
  };
  auto full = [&] { return opts.cap && out.size() >= opts.cap; };

  if (opts.strategy == Strategy::random) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::set<std::uint64_t> tried;
    while (tried.size() < total && !full()) {
      std::uint64_t k = pick(rng);
      if (tried.insert(k).second) visit(k);
    }
  } else {
    for (std::uint64_t k = 0; k < total && !full(); ++k) visit(k);
  }
  return out;
}

}  // namespace parasp
