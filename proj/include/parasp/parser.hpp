#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "parasp/syntax.hpp"

namespace parasp {

/// Syntax error carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
};

/// Parses a rule file.
///
/// Grammar:
///   rule     := literal [ ":-" body ] "."
///   body     := conjunct { ";" conjunct }
///   conjunct := element { "," element }
///   element  := literal | "not" literal | literal "in" "{" tv,... "}" | "#t" | "#f" | "#u" | "#i"
///   literal  := { "-" } ident [ "(" term { "," term } ")" ]
/// `%` starts a comment running to the end of the line. Repeated `-` cancel in pairs.
Program parse_program(std::string_view text);

/// Parses a single literal such as `-ns(o1)`; trailing input is an error.
Literal parse_literal(std::string_view text);

}  // namespace parasp
