#pragma once

// Tokenizer shared by the rule-file and hypothesis-file readers.

#include <string>
#include <string_view>
#include <vector>

#include "parasp/parser.hpp"

namespace parasp::detail {

enum class Tok {
  ident,     // lowercase-initial name
  variable,  // uppercase- or underscore-initial name
  lparen,
  rparen,
  lbrace,
  rbrace,
  comma,
  semicolon,
  dot,
  neck,  // :-
  minus,
  equals,
  hash_const,  // #t #f #u #i
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(Tok::ident) && peek().text == kw; }
  const Token& expect(Tok k, std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// literal := { "-" } ident [ "(" term { "," term } ")" ]
Literal read_literal(TokenStream& ts);

}  // namespace parasp::detail
