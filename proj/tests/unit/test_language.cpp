#include <doctest.h>

#include "parasp/hypotheses.hpp"
#include "parasp/language.hpp"
#include "parasp/parser.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace parasp;
using namespace parasp::testing;

TEST_CASE("parse: default literal") {
  Program p = parse_program("p :- not q.");
  REQUIRE(p.rules.size() == 1);
  CHECK(p.rules[0].head == Literal::prop("p"));
  REQUIRE(p.rules[0].body.size() == 1);
  REQUIRE(p.rules[0].body[0].size() == 1);
  CHECK(p.rules[0].body[0][0] == BodyElement{DefaultElement{Literal::prop("q")}});
}

TEST_CASE("parse: negated head with a variable") {
  Program p = parse_program("-ns(X) :- bp(X).");
  REQUIRE(p.rules.size() == 1);
  CHECK(p.rules[0].head.negated);
  CHECK(p.rules[0].head.atom.predicate == "ns");
  REQUIRE(p.rules[0].head.atom.args.size() == 1);
  CHECK(p.rules[0].head.atom.args[0].is_variable());
}

TEST_CASE("parse: inspection") {
  Program p = parse_program("p :- q in {u,f}.");
  REQUIRE(p.rules[0].body[0].size() == 1);
  const auto* in = std::get_if<InspectElement>(&p.rules[0].body[0][0]);
  REQUIRE(in);
  CHECK(in->literal == Literal::prop("q"));
  CHECK(in->values == TruthSet{TruthValue::u, TruthValue::f});
}

TEST_CASE("parse: disjunction, constants, comments, double negation") {
  Program p = parse_program("% header\na :- b, #t ; --c, not -d.  % tail\nb.\n");
  REQUIRE(p.rules.size() == 2);
  REQUIRE(p.rules[0].body.size() == 2);
  CHECK(p.rules[0].body[0][1] == BodyElement{ConstElement{TruthValue::t}});
  CHECK(p.rules[0].body[1][0] == BodyElement{LitElement{Literal::prop("c")}});
  CHECK(p.rules[0].body[1][1] == BodyElement{DefaultElement{Literal::prop("d", true)}});
  CHECK(p.rules[1].is_fact());
}

TEST_CASE("parse: errors carry positions") {
  try {
    parse_program("p.\nq :- .");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_program("p :- not not q."), ParseError);
  CHECK_THROWS_AS(parse_program("not p :- q."), ParseError);
  CHECK_THROWS_AS(parse_program("p in {t} :- q."), ParseError);
  CHECK_THROWS_AS(parse_program("p :- not q in {t}."), ParseError);
  CHECK_THROWS_AS(parse_program("p :- q"), ParseError);
  CHECK_THROWS_AS(parse_program("p :- q in {x}."), ParseError);
  CHECK_THROWS_AS(parse_program("P."), ParseError);
}

TEST_CASE("parse and print round trip") {
  Rng rng(11);
  for (int n = 0; n < 300; ++n) {
    Program p;
    switch (n % 3) {
      case 0: p = random_pure(rng, {6, 8, 3, 0.2, 0.4, 0.2}); break;
      case 1: p = random_normal_asp(rng, {}); break;
      default: {
        LayeredShape s;
        s.defaults = n % 2 == 0;
        s.disjunction = 0.3;
        p = random_layered(rng, s);
      }
    }
    CAPTURE(p.to_string());
    CHECK(parse_program(p.to_string()) == p);
  }
  Program vars = parse_program("r(X, Y) :- s(X), -t(Y, c) ; not u(X) , v(Y) in {t}.");
  CHECK(parse_program(vars.to_string()) == vars);
}

TEST_CASE("ground: direct substitution") {
  Program g = ground(parse_program("r(X) :- s(X).\ns(a).\ns(b)."));
  std::vector<std::string> text;
  for (const auto& r : g.rules) text.push_back(r.to_string());
  CHECK(std::count(text.begin(), text.end(), "r(a) :- s(a).") == 1);
  CHECK(std::count(text.begin(), text.end(), "r(b) :- s(b).") == 1);
  CHECK(g.rules.size() == 4);
}

TEST_CASE("ground: rescue program instances") {
  Program src = parse_program(slurp(data_path("rescue.4ql")));
  Program g = ground(src);
  std::size_t variable_rules = 0, facts = 0;
  for (const auto& r : src.rules) (r.is_ground() ? facts : variable_rules) += 1;
  CHECK(variable_rules == 2);
  CHECK(g.rules.size() == facts + 3 * variable_rules);
  CHECK(g.is_ground());
  CHECK(ground(g) == g);
}

TEST_CASE("ground: identity, idempotence and size bound") {
  Program flat = parse_program("p :- q. q :- not r.");
  CHECK(ground(flat) == flat);
  Program p = parse_program("a(X, Y) :- b(X), c(Y). b(k1). c(k2). c(k3). d(X) :- b(X) ; c(X).");
  Program g = ground(p);
  CHECK(ground(g) == g);
  // 3 constants, at most 2 variables per rule
  CHECK(g.rules.size() <= p.rules.size() * 9);
}

TEST_CASE("ground: unsafe rules") {
  CHECK_THROWS_AS(ground(parse_program("p(X) :- q. q.")), GroundingError);
  CHECK_THROWS_AS(ground(parse_program("p(a) :- not q(X).")), GroundingError);
  CHECK_THROWS_AS(ground(parse_program("p(X) :- q(X).")), GroundingError);
  try {
    ground(parse_program("a. p(X) :- q(Y), r(X) ; s(X), not t(Z)."));
    FAIL("expected a grounding error");
  } catch (const GroundingError& e) {
    CHECK(e.rule_index() == 1);
  }
}

TEST_CASE("dialects") {
  CHECK(classify_dialect(data_program("choice.4sp")) == Dialect::foursp);
  CHECK(classify_dialect(data_program("ontology.4ql")) == Dialect::pure);
  CHECK(classify_dialect(data_program("unsupported.4ql")) == Dialect::fourql);
  CHECK(classify_dialect(prog("p :- a, not q. a.")) == Dialect::normal_asp);
  CHECK(classify_dialect(prog("p :- a, not q ; b. a.")) == Dialect::foursp);
  CHECK(classify_dialect(prog("p :- a, not q, r in {t}.")) == Dialect::mixed);
  CHECK(guard_violations(data_program("choice.4sp")) == std::vector<std::size_t>{0, 1});
  CHECK(guard_violations(prog("p :- #t, not q.")).empty());
  CHECK(to_string(Dialect::normal_asp) == "normal-asp");
}

TEST_CASE("defaults become inspections") {
  Program p = defaults_to_inspections(prog("p :- a, not -q."));
  CHECK(p.rules[0].body[0][1] ==
        BodyElement{InspectElement{Literal::prop("q", true), TruthSet{TruthValue::f, TruthValue::u}}});
  CHECK_FALSE(p.has_default_negation());
}

TEST_CASE("hypothesis files") {
  Program p5 = data_program("choice.4sp");
  HypothesisSet h = parse_hypotheses("assume not q = t. assume not p = f.", p5);
  REQUIRE(h.entries.size() == 2);
  CHECK(h.find(Literal::prop("q"))->value() == TruthValue::t);
  CHECK(h.find(Literal::prop("p"))->value() == TruthValue::f);
  CHECK(h.contradicted().empty());
  CHECK(parse_hypotheses(h.to_string(), p5) == h);

  CHECK_THROWS_AS(parse_hypotheses("assume not q = t. assume not p = f. assume not r = t.", p5),
                  HypothesisError);
  CHECK_THROWS_AS(parse_hypotheses("assume not q = t.", p5), HypothesisError);
  CHECK_THROWS_AS(parse_hypotheses("assume not q = t. assume not q = f. assume not p = f.", p5),
                  ParseError);
  try {
    parse_hypotheses("assume not p = i.", p5);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("assume not -p = f") != std::string::npos);
  }
  CHECK_THROWS_AS(make_hypotheses({{Literal::prop("p"), TruthValue::u}}), HypothesisError);
}
