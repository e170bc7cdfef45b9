// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "parasp/asp_oracle.hpp"
#include "parasp/stratify.hpp"
#include "parasp/wsm.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace parasp;
using namespace parasp::testing;
using Clock = std::chrono::steady_clock;
using TV = TruthValue;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

HypothesisSet hyp(const Program& p, const std::string& file) {
  return parse_hypotheses(slurp(data_path(file)), p);
}

Outcome worked_examples() {
  Outcome o;
  const auto start = Clock::now();
  Program p2 = data_program("ontology.4ql");
  Interpretation expected2 = interp("{b(o1), cns(o1), bp(o1), ns(o1), -ns(o1)}");
  if (generate_wsm_4ql(p2) != expected2) fail(o, "ontology 4QL model");
  if (generate_wsm_4sp(p2, HypothesisSet{}).model != expected2) fail(o, "ontology 4SP model");

  Interpretation m1 = generate_wsm_4ql(data_program("rescue.4ql"));
  for (const char* l : {"saves(resc,resc)", "-saves(resc,resc)", "saves(eve,eve)",
                        "-saves(resc,eve)", "-saves(jack,jack)", "saves(resc,jack)"})
    if (!m1.contains(lit(l))) fail(o, std::string("rescue model lacks ") + l);
  if (m1.value(atom("saves(resc,resc)")) != TV::i) fail(o, "saves(resc,resc) is not i");
  if (m1.value(atom("saves(eve,eve)")) != TV::t) fail(o, "saves(eve,eve) is not t");
  if (m1.value(atom("saves(resc,jack)")) != TV::t) fail(o, "saves(resc,jack) is not t");

  Program p4 = data_program("unsupported.4sp");
  Interpretation all4 = interp("{p, -p, q, -q}");
  for (const char* h : {"unsupported_t.hyp", "unsupported_f.hyp"})
    if (generate_wsm_4sp(p4, hyp(p4, h)).model != all4) fail(o, std::string("unsupported.4sp with ") + h);

  Program p5 = data_program("choice.4sp");
  if (generate_wsm_4sp(p5, hyp(p5, "choice_p.hyp")).model != interp("{p}"))
    fail(o, "choice.4sp with not q = t, not p = f");
  if (generate_wsm_4sp(p5, hyp(p5, "choice_both.hyp")).model != all4)
    fail(o, "choice.4sp with both t");

  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (ms >= 1000) fail(o, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail = "rescue, ontology, unsupported, choice";
  return o;
}

Outcome truth_tables() {
  Outcome o;
  const auto start = Clock::now();
  constexpr TV f = TV::f, u = TV::u, i = TV::i, t = TV::t;
  const TV neg[] = {t, u, i, f};
  const TV dneg[] = {t, t, i, f};
  const TV imp[4][4] = {{t, t, t, t}, {t, t, t, t}, {f, f, t, f}, {f, f, t, t}};
  int entries = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    TV va = kAllTruthValues[a];
    if (strong_neg(va) != neg[a]) fail(o, "negation of " + to_string(va));
    if (default_neg(va) != dneg[a]) fail(o, "default negation of " + to_string(va));
    entries += 2;
    for (std::size_t b = 0; b < 4; ++b, ++entries)
      if (implies(va, kAllTruthValues[b]) != imp[a][b])
        fail(o, "implication " + to_string(va) + " -> " + to_string(kAllTruthValues[b]));
  }
  TruthOrdering B(OrderingKind::B), L(OrderingKind::L);
  if (disj(i, u, B) != t) fail(o, "lub_B{i,u}");
  if (conj(i, u, B) != f) fail(o, "glb_B{i,u}");
  if (disj(i, u, L) != i) fail(o, "lub_L{i,u}");
  if (conj(i, u, L) != u) fail(o, "glb_L{i,u}");
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (ms >= 100) fail(o, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail = std::to_string(entries) + " table entries, 4 lattice values";
  return o;
}

Outcome stratified_asp(Rng& rng) {
  Outcome o;
  int programs = 0, consistent = 0;
  while (programs < 600) {
    LayeredShape s;
    s.atoms = pick(rng, 2, 10);
    s.rules = pick(rng, 1, 15);
    s.levels = pick(rng, 1, 4);
    s.defaults = true;
    s.neg = 0.2;
    Program p = random_layered(rng, s);
    if (!find_stratification(p, ExpressionKind::defaults)) {
      fail(o, "constructed program not stratifiable: " + p.to_string());
      break;
    }
    ++programs;
    Interpretation wsm = generate_wsm_4ql(defaults_to_inspections(p));
    auto answers = enumerate_answer_sets(p);
    if (wsm.consistent()) {
      ++consistent;
      if (answers != std::vector<Interpretation>{wsm})
        fail(o, "consistent model " + wsm.to_string() + " is not the answer set of\n" + p.to_string());
    } else if (!answers.empty()) {
      fail(o, "inconsistent model but an answer set exists for\n" + p.to_string());
    }
  }
  if (o.ok)
    o.detail = std::to_string(programs) + " programs, " + std::to_string(consistent) +
               " with an answer set, 0 mismatches";
  return o;
}

Outcome answer_sets_in_4sp(Rng& rng) {
  Outcome o;
  int programs = 0, answers = 0;
  for (; programs < 300; ++programs) {
    AspShape s;
    s.atoms = pick(rng, 2, 8);
    s.rules = pick(rng, 2, 12);
    s.max_defaults = pick(rng, 1, 4);
    Program p = random_normal_asp(rng, s);
    std::set<Interpretation> models;
    for (const auto& r : enumerate_4sp_models(p, {Strategy::exhaustive})) models.insert(r.model);
    for (const auto& I : enumerate_answer_sets(p)) {
      ++answers;
      if (!models.count(I)) fail(o, "answer set " + I.to_string() + " missing for\n" + p.to_string());
    }
  }
  if (o.ok)
    o.detail = std::to_string(programs) + " programs, " + std::to_string(answers) +
               " answer sets, 0 omissions";
  return o;
}

Outcome confluence(Rng& rng) {
  Outcome o;
  int programs = 0;
  for (; programs < 600; ++programs) {
    Program p;
    if (programs % 2 == 0) {
      p = random_pure(rng, {pick(rng, 3, 10), pick(rng, 3, 20), 3, 0.25, 0.3, 0.05});
    } else {
      LayeredShape s;
      s.defaults = false;
      s.disjunction = 0.3;
      s.atoms = pick(rng, 3, 10);
      s.rules = pick(rng, 3, 20);
      p = random_layered(rng, s);
    }
    Interpretation base = generate_wsm_4ql(p);
    for (int k = 0; k < 5; ++k)
      if (generate_wsm_4ql(shuffled(p, rng)) != base) {
        fail(o, "permutation changed the model of\n" + p.to_string());
        break;
      }
  }
  if (o.ok) o.detail = std::to_string(programs) + " programs x 5 permutations, 0 divergences";
  return o;
}

Outcome well_supported(Rng& rng, std::string& info) {
  Outcome o;
  if (check_well_supported(prog("p :- q. q :- p."), interp("{p, q}")) != Verdict::no)
    fail(o, "planted {p, q} accepted");
  int checked = 0, unknown = 0;
  for (const char* f : {"ontology.4ql", "rescue.4ql"}) {
    Program p = data_program(f);
    if (check_well_supported(p, generate_wsm_4ql(p)) != Verdict::yes) fail(o, std::string(f) + " rejected");
    ++checked;
  }
  for (int n = 0; n < 2000; ++n) {
    Program p = random_pure(rng, {pick(rng, 2, 7), pick(rng, 2, 10), 3, 0.3, 0.0, 0.05});
    Interpretation m = generate_wsm_4ql(p);
    Verdict v = check_well_supported(p, m);
    if (v == Verdict::unknown) {
      ++unknown;
      continue;
    }
    ++checked;
    if (v == Verdict::no) fail(o, "engine model " + m.to_string() + " rejected for\n" + p.to_string());
  }
  int disjunctive = 0, rejected = 0;
  for (int n = 0; n < 1000; ++n) {
    Program p = random_pure(rng, {pick(rng, 2, 6), pick(rng, 2, 8), 3, 0.3, 0.4, 0.0});
    Verdict v = check_well_supported(p, generate_wsm_4ql(p));
    if (v == Verdict::unknown) continue;
    ++disjunctive;
    rejected += v == Verdict::no;
  }
  if (o.ok)
    o.detail = std::to_string(checked) + " single-conjunct models accepted (" +
               std::to_string(unknown) + " over the search cap), planted loop rejected";
  info = "disjunctive bodies: " + std::to_string(rejected) + " of " + std::to_string(disjunctive) +
         " engine models rejected by the checker";
  return o;
}

Program random_4sp(Rng& rng, int n) {
  Program p;
  auto random_lit = [&] { return Literal::prop("a" + std::to_string(pick(rng, 0, n - 1)), chance(rng, 0.2)); };
  for (int r = 0; r < 2 * n; ++r) {
    Rule rule;
    rule.head = random_lit();
    if (r >= n / 4) {
      Conjunct c;
      int len = pick(rng, 1, 2);
      for (int e = 0; e < len; ++e) {
        if (chance(rng, 0.25)) c.push_back(DefaultElement{random_lit()});
        else c.push_back(LitElement{random_lit()});
      }
      rule.body.push_back(std::move(c));
      if (chance(rng, 0.2)) rule.body.push_back({LitElement{random_lit()}});
    }
    p.rules.push_back(std::move(rule));
  }
  return p;
}

Outcome tractability(Rng& rng, std::string& info) {
  Outcome o;
  const int sizes[] = {50, 100, 200, 400};
  double worst[4] = {0, 0, 0, 0};
  double slowest400 = 0;
  for (int k = 0; k < 4; ++k) {
    int n = sizes[k];
    for (int trial = 0; trial < 5; ++trial) {
      Program p = random_4sp(rng, n);
      std::map<Literal, TV> values;
      for (const auto& l : p.default_literals()) values[l] = chance(rng, 0.5) ? TV::t : TV::f;
      HypothesisSet h = make_hypotheses(values);
      const auto start = Clock::now();
      auto r = generate_wsm_4sp(p, h);
      double secs = std::chrono::duration<double>(Clock::now() - start).count();
      worst[k] = std::max(worst[k], static_cast<double>(r.stats.body_evaluations));
      if (n == 400) slowest400 = std::max(slowest400, secs);
    }
  }
  // c is fitted at the smallest size; larger sizes must stay under c*n^3
  const double c = worst[0] / std::pow(sizes[0], 3);
  std::ostringstream counts;
  for (int k = 0; k < 4; ++k) {
    double bound = c * std::pow(sizes[k], 3);
    counts << (k ? ", " : "") << "n=" << sizes[k] << ": " << static_cast<long long>(worst[k]);
    if (worst[k] > bound) fail(o, "n=" + std::to_string(sizes[k]) + " exceeds c*n^3");
  }
  if (slowest400 >= 5.0) fail(o, "n=400 took " + std::to_string(slowest400) + " s");
  double slope = std::log(worst[3] / worst[0]) / std::log(static_cast<double>(sizes[3]) / sizes[0]);
  if (o.ok) {
    std::ostringstream d;
    d.precision(3);
    d << "c=" << c << ", growth exponent " << slope << ", slowest n=400 run " << slowest400 << " s";
    o.detail = d.str();
  }
  info = "body evaluations (max of 5): " + counts.str();
  return o;
}

Outcome interlace_algebra(Rng& rng) {
  Outcome o;
  int pairs = 0;
  for (; pairs < 2000; ++pairs) {
    int atoms = pick(rng, 1, 6);
    Interpretation I;
    HypothesisSet h;
    for (int k = 0; k < 2 * atoms; ++k) {
      if (chance(rng, 0.4)) I.insert(random_literal(rng, atoms, 0.5));
      if (chance(rng, 0.5))
        h.entries[random_literal(rng, atoms, 0.5)].add(
            chance(rng, 0.5) ? Assumptions::assume_true() : Assumptions::assume_false());
    }
    auto closed = interlace(I, h);
    if (!I.subset_of(closed.first)) fail(o, "not extensive");
    for (const auto& [l, a] : h.entries)
      if ((closed.second.find(l)->mask() & a.mask()) != a.mask()) fail(o, "hypotheses lost");
    if (interlace(closed.first, closed.second) != closed) fail(o, "not idempotent");
    for (int k = 0; k < 3; ++k)
      if (oracle::shuffled_interlace(I, h, rng) != closed) fail(o, "order dependent");
    if (!o.ok) break;
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, 3 application orders each";
  return o;
}

Outcome stratification(Rng& rng) {
  Outcome o;
  if (find_stratification(data_program("unsupported.4ql"), ExpressionKind::inspections))
    fail(o, "unsupported.4ql stratified");
  if (find_stratification(data_program("choice.4sp"), ExpressionKind::defaults))
    fail(o, "choice.4sp stratified");
  int programs = 0;
  for (; programs < 1000; ++programs) {
    LayeredShape s;
    s.defaults = programs % 2 == 0;
    s.atoms = pick(rng, 2, 15);
    s.rules = pick(rng, 1, 25);
    s.levels = pick(rng, 1, 5);
    s.disjunction = 0.25;
    Program p = random_layered(rng, s);
    auto kind = s.defaults ? ExpressionKind::defaults : ExpressionKind::inspections;
    auto found = find_stratification(p, kind);
    if (!found) {
      fail(o, "no stratification for\n" + p.to_string());
      break;
    }
    if (!validate_stratification(p, *found)) {
      fail(o, "invalid stratification for\n" + p.to_string());
      break;
    }
  }
  if (o.ok) o.detail = "unsupported.4ql (I) and choice.4sp (D) rejected, " + std::to_string(programs) + " constructed programs validated";
  return o;
}

}  // namespace

int main() {
  Rng rng(20240601);
  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& check) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", id, name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.ok;
  };
  std::string ws_info, tract_info;
  report(1, "worked examples", worked_examples);
  report(2, "truth tables", truth_tables);
  report(3, "stratified ASP vs 4QL", [&] { return stratified_asp(rng); });
  report(4, "answer sets among 4SP models", [&] { return answer_sets_in_4sp(rng); });
  report(5, "confluence", [&] { return confluence(rng); });
  report(6, "well-supportedness", [&] { return well_supported(rng, ws_info); });
  std::printf("INFO criterion 6: %s\n", ws_info.c_str());
  report(7, "tractability", [&] { return tractability(rng, tract_info); });
  std::printf("INFO criterion 7: %s\n", tract_info.c_str());
  report(8, "interlace algebra", [&] { return interlace_algebra(rng); });
  report(9, "stratification", [&] { return stratification(rng); });
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
