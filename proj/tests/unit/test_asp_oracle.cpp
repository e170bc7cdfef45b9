#include <doctest.h>

#include "parasp/asp_oracle.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace parasp;
using namespace parasp::testing;

TEST_CASE("least models") {
  CHECK(generate_least(prog("p. q :- p.")) == interp("{p, q}"));
  CHECK(generate_least(prog("q :- p.")) == interp("{}"));
  CHECK(generate_least(data_program("ontology.4ql")) ==
        interp("{b(o1), cns(o1), bp(o1), ns(o1), -ns(o1)}"));
  CHECK(generate_least(prog("p. -p. q :- p.")) == interp("{p, -p, q}"));
  CHECK(generate_least(prog("p :- #t. q :- #u. r :- #i ; p.")) == interp("{p, r}"));
  CHECK_THROWS_AS(generate_least(prog("p :- not q.")), OracleError);
  CHECK_THROWS_AS(generate_least(prog("p :- q in {t}.")), OracleError);
}

TEST_CASE("least models match naive evaluation under any rule order") {
  Rng rng(37);
  for (int n = 0; n < 300; ++n) {
    Program p = random_pure(rng, {6, 10, 3, 0.25, 0.3, 0.1});
    Interpretation expected = oracle::naive_least(p);
    CHECK(generate_least(p) == expected);
    CHECK(generate_least(shuffled(p, rng)) == expected);
  }
}

TEST_CASE("least model is minimal") {
  Rng rng(41);
  for (int n = 0; n < 100; ++n) {
    Program p = random_pure(rng, {4, 6, 2, 0.3, 0.0, 0.0});
    Interpretation M = generate_least(p);
    std::vector<Literal> lits(M.begin(), M.end());
    for (std::size_t drop = 0; drop < lits.size(); ++drop) {
      Interpretation smaller;
      for (std::size_t k = 0; k < lits.size(); ++k)
        if (k != drop) smaller.insert(lits[k]);
      // some rule is violated: its body holds by membership but the head is missing
      bool closed = true;
      for (const auto& r : p.rules) {
        bool fires = r.body.empty();
        for (const auto& c : r.body) fires = fires || oracle::conjunct_fires(smaller, c);
        if (fires && !smaller.contains(r.head)) closed = false;
      }
      CHECK_FALSE(closed);
    }
  }
}

TEST_CASE("reducts") {
  Program p5 = data_program("choice.4sp");
  CHECK(reduct(p5, interp("{p}")) == prog("p :- #t. q :- #f."));
  Program pure = prog("a. b :- a.");
  CHECK(reduct(pure, interp("{a}")) == pure);
  CHECK(reduct(data_program("unsupported.4sp"), interp("{p, q}")) == prog("p :- #f. q :- p."));
  CHECK_THROWS_AS(reduct(p5, interp("{p, -p}")), OracleError);
}

TEST_CASE("answer sets") {
  CHECK(enumerate_answer_sets(data_program("choice.4sp")) ==
        std::vector<Interpretation>{interp("{p}"), interp("{q}")});
  CHECK(enumerate_answer_sets(data_program("rescue.4ql")).empty());
  CHECK(enumerate_answer_sets(prog("p.")) == std::vector<Interpretation>{interp("{p}")});
  CHECK(enumerate_answer_sets(data_program("choice.4sp"), 1).size() == 1);
  CHECK(enumerate_answer_sets(data_program("unsupported.4sp")).empty());
  CHECK(enumerate_answer_sets(prog("p :- not -p. -p :- not p.")) ==
        std::vector<Interpretation>{interp("{p}"), interp("{-p}")});

  std::string big;
  for (int k = 0; k < 21; ++k) big += "a" + std::to_string(k) + ". ";
  CHECK_THROWS_AS(enumerate_answer_sets(prog(big)), OracleError);
  CHECK(enumerate_answer_sets(prog(big), 0, 21).size() == 1);
  CHECK_THROWS_AS(enumerate_answer_sets(prog("p :- q ; r.")), OracleError);
}

TEST_CASE("answer sets match the 3^n walk") {
  Rng rng(43);
  for (int n = 0; n < 250; ++n) {
    AspShape shape;
    shape.atoms = pick(rng, 2, 6);
    shape.rules = pick(rng, 1, 9);
    shape.max_defaults = pick(rng, 0, 4);
    Program p = random_normal_asp(rng, shape);
    CAPTURE(p.to_string());
    auto sets = enumerate_answer_sets(p);
    CHECK(sets == oracle::naive_answer_sets(p));
    for (const auto& I : sets) {
      CHECK(I.consistent());
      CHECK(is_model(I, p, Logic::k3()));
    }
  }
}
