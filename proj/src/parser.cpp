#include "parasp/parser.hpp"

#include <cctype>

#include "lexer.hpp"

namespace parasp {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

namespace detail {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++k;
    }
  };
  while (k < text.size()) {
    char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (k < text.size() && text[k] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    auto push = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(text.substr(k, len)), tl, tc});
      advance(len);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (k + len < text.size() && ident_char(text[k + len])) ++len;
      bool var = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      push(var ? Tok::variable : Tok::ident, len);
      continue;
    }
    switch (c) {
      case '(': push(Tok::lparen, 1); continue;
      case ')': push(Tok::rparen, 1); continue;
      case '{': push(Tok::lbrace, 1); continue;
      case '}': push(Tok::rbrace, 1); continue;
      case ',': push(Tok::comma, 1); continue;
      case ';': push(Tok::semicolon, 1); continue;
      case '.': push(Tok::dot, 1); continue;
      case '-': push(Tok::minus, 1); continue;
      case '=': push(Tok::equals, 1); continue;
      case ':':
        if (k + 1 < text.size() && text[k + 1] == '-') {
          push(Tok::neck, 2);
          continue;
        }
        break;
      case '#':
        if (k + 1 < text.size() && std::string_view("tfui").find(text[k + 1]) != std::string_view::npos &&
            (k + 2 >= text.size() || !ident_char(text[k + 2]))) {
          push(Tok::hash_const, 2);
          continue;
        }
        break;
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

const Token& TokenStream::expect(Tok k, std::string_view what) {
  if (!at(k)) {
    const Token& t = peek();
    fail("expected " + std::string(what) + ", found " +
         (t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'"));
  }
  return next();
}

void TokenStream::fail(const std::string& message) const {
  throw ParseError(message, peek().line, peek().column);
}

Literal read_literal(TokenStream& ts) {
  bool negated = false;
  while (ts.at(Tok::minus)) {
    ts.next();
    negated = !negated;
  }
  if (ts.at_keyword("not"))
    ts.fail("default negation cannot occur under strong negation or inside another default negation");
  if (ts.at(Tok::variable)) ts.fail("predicate names must start with a lowercase letter");
  Atom atom;
  atom.predicate = ts.expect(Tok::ident, "predicate name").text;
  if (atom.predicate == "in") ts.fail("'in' is reserved");
  if (ts.at(Tok::lparen)) {
    ts.next();
    for (;;) {
      if (ts.at(Tok::ident) || ts.at(Tok::variable))
        atom.args.push_back(Term{ts.next().text});
      else
        ts.fail("expected a term");
      if (ts.at(Tok::comma)) {
        ts.next();
        continue;
      }
      ts.expect(Tok::rparen, "')'");
      break;
    }
  }
  return Literal(std::move(atom), negated);
}

}  // namespace detail

namespace {

using detail::Tok;
using detail::TokenStream;

TruthValue const_value(const std::string& text) { return *truth_from_string(text.substr(1)); }

BodyElement read_element(TokenStream& ts) {
  if (ts.at(Tok::hash_const)) return ConstElement{const_value(ts.next().text)};
  if (ts.at_keyword("not")) {
    ts.next();
    if (ts.at_keyword("not")) ts.fail("nested default negation is not allowed");
    Literal l = detail::read_literal(ts);
    if (ts.at_keyword("in")) ts.fail("inspection cannot occur inside default negation");
    return DefaultElement{std::move(l)};
  }
  Literal l = detail::read_literal(ts);
  if (!ts.at_keyword("in")) return LitElement{std::move(l)};
  ts.next();
  ts.expect(Tok::lbrace, "'{'");
  TruthSet set;
  if (!ts.at(Tok::rbrace)) {
    for (;;) {
      const auto& tok = ts.peek();
      auto v = tok.kind == Tok::ident ? truth_from_string(tok.text) : std::nullopt;
      if (!v) ts.fail("expected one of t, f, u, i in inspection set");
      ts.next();
      set.insert(*v);
      if (ts.at(Tok::comma)) {
        ts.next();
        continue;
      }
      break;
    }
  }
  ts.expect(Tok::rbrace, "'}'");
  if (ts.at_keyword("in")) ts.fail("nested inspection is not allowed");
  return InspectElement{std::move(l), set};
}

Rule read_rule(TokenStream& ts) {
  if (ts.at_keyword("not")) ts.fail("default negation is not allowed in a rule head");
  if (ts.at(Tok::hash_const)) ts.fail("a rule head must be a classical literal");
  Rule rule;
  rule.head = detail::read_literal(ts);
  if (ts.at_keyword("in")) ts.fail("inspection is not allowed in a rule head");
  if (ts.at(Tok::neck)) {
    ts.next();
    for (;;) {
      Conjunct c;
      c.push_back(read_element(ts));
      while (ts.at(Tok::comma)) {
        ts.next();
        c.push_back(read_element(ts));
      }
      rule.body.push_back(std::move(c));
      if (!ts.at(Tok::semicolon)) break;
      ts.next();
    }
  }
  ts.expect(Tok::dot, "'.'");
  return rule;
}

}  // namespace

Program parse_program(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  Program p;
  while (!ts.at(Tok::end)) p.rules.push_back(read_rule(ts));
  return p;
}

Literal parse_literal(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  Literal l = detail::read_literal(ts);
  if (!ts.at(Tok::end)) ts.fail("unexpected input after literal");
  return l;
}

}  // namespace parasp
