#include "parasp/hypotheses.hpp"

#include <set>

#include "lexer.hpp"

namespace parasp {

std::vector<Literal> HypothesisSet::contradicted() const {
  std::vector<Literal> out;
  for (const auto& [l, a] : entries)
    if (a.contradicted()) out.push_back(l);
  return out;
}

std::string HypothesisSet::to_string() const {
  std::string s;
  for (const auto& [l, a] : entries)
    s += "assume not " + l.to_string() + " = " + parasp::to_string(a.value()) + ".\n";
  return s;
}

HypothesisSet make_hypotheses(const std::map<Literal, TruthValue>& values) {
  HypothesisSet h;
  for (const auto& [l, v] : values) {
    if (v == TruthValue::t)
      h.entries[l] = Assumptions::assume_true();
    else if (v == TruthValue::f)
      h.entries[l] = Assumptions::assume_false();
    else
      throw HypothesisError("hypothesis for not " + l.to_string() + " must be t or f");
  }
  return h;
}

HypothesisSet parse_hypotheses(std::string_view text, const Program& p) {
  using detail::Tok;
  detail::TokenStream ts(detail::tokenize(text));
  HypothesisSet h;
  while (!ts.at(Tok::end)) {
    if (!ts.at_keyword("assume")) ts.fail("expected 'assume'");
    ts.next();
    if (!ts.at_keyword("not")) ts.fail("expected 'not'");
    ts.next();
    int line = ts.peek().line, col = ts.peek().column;
    Literal l = detail::read_literal(ts);
    if (!l.atom.is_ground()) throw ParseError("hypotheses must mention ground literals", line, col);
    ts.expect(Tok::equals, "'='");
    const auto& vt = ts.peek();
    if (vt.kind != Tok::ident) ts.fail("expected t or f");
    Assumptions a;
    if (vt.text == "t") {
      a = Assumptions::assume_true();
    } else if (vt.text == "f") {
      a = Assumptions::assume_false();
    } else if (vt.text == "i") {
      ts.fail("hypothesis value i is not allowed; express it as assume not " + l.to_string() +
              " = f. assume not " + l.complement().to_string() + " = f.");
    } else {
      ts.fail("expected t or f");
    }
    ts.next();
    ts.expect(Tok::dot, "'.'");
    auto [it, inserted] = h.entries.emplace(l, a);
    if (!inserted && !(it->second == a))
      throw ParseError("conflicting hypotheses for not " + l.to_string(), line, col);
  }

  auto wanted = p.default_literals();
  std::set<Literal> wanted_set(wanted.begin(), wanted.end());
  for (const auto& [l, a] : h.entries)
    if (!wanted_set.count(l))
      throw HypothesisError("hypothesis for not " + l.to_string() +
                            ", which does not occur under default negation in the program");
  for (const auto& l : wanted)
    if (!h.entries.count(l)) throw HypothesisError("missing hypothesis for not " + l.to_string());
  return h;
}

}  // namespace parasp
