#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parasp/syntax.hpp"

namespace parasp {

/// Which body expressions must refer strictly downwards: default literals or inspections.
enum class ExpressionKind { defaults, inspections };

std::string to_string(ExpressionKind k);

/// Ordered partition of rule indices into strata S1..Sr.
struct Stratification {
  ExpressionKind kind = ExpressionKind::inspections;
  std::vector<std::vector<std::size_t>> strata;

  bool operator==(const Stratification&) const = default;
};

/// Work counters for the stratification search: nodes and edges touched.
struct StratifyStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t steps = 0;
};

/// Finds a stratification of a ground program with respect to `kind`, if one exists.
///
/// An atom and its strong negation form one definition unit. Every body reference to a defined
/// unit becomes an edge to the head's unit; references through `kind` expressions are strict.
/// A stratification exists iff no strongly connected component contains a strict edge, and
/// units are placed at the length of the longest strict path reaching them. Atoms without
/// defining rules impose no constraint. Strata are listed lowest first, rule indices ascending.
std::optional<Stratification> find_stratification(const Program& p, ExpressionKind kind,
                                                  StratifyStats* stats = nullptr);

/// Checks the three stratification conditions. Throws std::out_of_range for a rule index
/// outside the program.
bool validate_stratification(const Program& p, const Stratification& s);

/// Atoms whose defining rules lie in the given stratum, sorted.
std::vector<Atom> defined_atoms(const Program& p, const Stratification& s, std::size_t stratum);

}  // namespace parasp
