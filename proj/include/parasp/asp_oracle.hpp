#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "parasp/semantics.hpp"
#include "parasp/syntax.hpp"

namespace parasp {

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Least model of a ground program without default literals or inspections.
///
/// Naive bottom-up closure where `-p` is just another proposition: a conjunct holds when all its
/// literals are members and its constants are #t. An inconsistent member still fires rules.
Interpretation generate_least(const Program& p);

/// Replaces each `not l` by the constant default_neg(I(l)). Throws OracleError when I is
/// inconsistent.
Program reduct(const Program& p, const Interpretation& I);

/// Answer sets in canonical order, at most `cap` of them (0 = no limit).
///
/// A candidate is a consistent interpretation over the program's atoms; it is an answer set when
/// it equals generate_least(reduct(p, I)). Candidates are grouped by which default-negated
/// literals they contain, since the reduct depends on nothing else. Throws OracleError when the
/// program has more than `atom_bound` atoms or is not in ASP syntax.
std::vector<Interpretation> enumerate_answer_sets(const Program& p, std::size_t cap = 0,
                                                  std::size_t atom_bound = 20);

}  // namespace parasp
