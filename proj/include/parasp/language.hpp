#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "parasp/syntax.hpp"

namespace parasp {

/// Raised for unsafe rules or programs that cannot be grounded.
class GroundingError : public std::runtime_error {
 public:
  GroundingError(const std::string& message, std::size_t rule_index)
      : std::runtime_error(message), rule_index_(rule_index) {}
  std::size_t rule_index() const { return rule_index_; }

 private:
  std::size_t rule_index_;
};

/// Instantiates every variable over the constants mentioned in the program.
///
/// A rule is safe when each variable of its head, and each variable inside a default literal
/// or inspection, also occurs in a classical literal of the same conjunct. Ground rules are
/// copied unchanged, so grounding is idempotent. Instances keep the source rule order and,
/// within a rule, enumerate substitutions lexicographically over the sorted constants.
Program ground(const Program& p);

/// The most specific dialect the (ground) program belongs to.
Dialect classify_dialect(const Program& p);

/// Indices of rules whose default literals lack a guarding classical literal or constant.
std::vector<std::size_t> guard_violations(const Program& p);

/// True when every body is a single conjunct of literals, default literals and constants
/// other than #i, i.e. the program has ASP syntax (the guard condition is not checked).
bool has_asp_syntax(const Program& p);

/// Replaces every `not l` by `l in {f,u}`.
Program defaults_to_inspections(const Program& p);

}  // namespace parasp
