#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parasp/hypotheses.hpp"
#include "parasp/semantics.hpp"
#include "parasp/stratify.hpp"
#include "parasp/syntax.hpp"

namespace parasp {

/// Rejected engine input: wrong dialect, missing stratification, uncovered hypotheses.
class EngineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EngineStats {
  std::size_t iterations = 0;        // Inc-loop rounds, summed over strata
  std::size_t body_evaluations = 0;  // element visits in closures plus rule-body evaluations
  std::size_t strata = 1;
};

/// Literal pairs {l, -l} forced by rules whose body is i (under L4+) while their head is not.
Interpretation find_correction(const Program& p, const Interpretation& I);

/// The well-supported model of a program without default negation. Inspections are eliminated
/// stratum by stratum; throws EngineError when the program is not stratifiable w.r.t. them.
Interpretation generate_wsm_4ql(const Program& p, EngineStats* stats = nullptr);

/// Replaces the inspections of each stratum by #t/#f, judged against the model of the strata
/// below, and returns the model of the resulting program. Throws EngineError when `s` is not a
/// valid inspection stratification of `p`.
Interpretation eliminate_inspections(const Program& p, const Stratification& s,
                                     EngineStats* stats = nullptr);

/// Joint closure of an interpretation and hypotheses:
/// a member l of I gains `not l <- f` (for literals h covers); `not l` assumed both t and f puts
/// l and -l into I; `not l` assumed f puts l into I.
std::pair<Interpretation, HypothesisSet> interlace(const Interpretation& I, const HypothesisSet& h);

struct Wsm4spResult {
  Interpretation model;
  HypothesisSet initial;
  HypothesisSet final_hypotheses;
  std::vector<Literal> contradicted;
  /// Every hypothesis set that produced this model (enumeration fills in more than one).
  std::vector<HypothesisSet> generators;
  EngineStats stats;
};

/// The well-supported model of a program under a hypothesis set for its default literals.
///
/// Throws EngineError for uncovered default literals or inspections without a stratification.
Wsm4spResult generate_wsm_4sp(const Program& p, const HypothesisSet& h);

enum class Strategy { lex, random, exhaustive };

struct EnumerationOptions {
  Strategy strategy = Strategy::lex;
  std::size_t cap = 0;  // distinct models; 0 = no limit
  std::uint64_t seed = 0;
  std::size_t exhaustive_bound = 16;
};

/// Runs generate_wsm_4sp over hypothesis sets in strategy order and keeps distinct models in
/// order of discovery. Lexicographic order lists default literals canonically, t before f.
std::vector<Wsm4spResult> enumerate_4sp_models(const Program& p, const EnumerationOptions& opts);

/// Hypothesis sets visited by the lexicographic and exhaustive strategies, index k of 2^n.
HypothesisSet lex_hypotheses(const Program& p, std::uint64_t k);

// Well-supportedness checking.

struct DependencyGraph {
  std::vector<Literal> vertices;                  // sorted
  std::vector<std::vector<std::size_t>> succ;     // head -> body literal
};

DependencyGraph dependency_graph(const Program& p);

/// All loops, or nullopt when some strongly connected component exceeds `scc_cap` vertices.
std::optional<std::vector<std::vector<Literal>>> find_loops(const Program& p,
                                                            std::size_t scc_cap = 12);

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

struct WellSupportedOptions {
  std::size_t minimality_cap = 16;  // literals of I searched for a smaller model
  std::size_t scc_cap = 12;
};

/// Checks well-supportedness of I for a pure program.
///
/// I must be a model under L4+ whose loops are externally supported, and no proper subset of I
/// may be such a model. A loop holding a t or i literal needs a rule with a disjunct avoiding the
/// loop, for a member or its complement, whose body is t or i; when some member is t, a rule for
/// a member must supply t. Returns unknown when a search cap is exceeded.
Verdict check_well_supported(const Program& p, const Interpretation& I,
                             const WellSupportedOptions& opts = {});

}  // namespace parasp
