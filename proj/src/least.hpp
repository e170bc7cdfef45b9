#pragma once

// Counter-based bottom-up closure over a compiled program (membership semantics).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parasp/compiled.hpp"

namespace parasp::detail {

class LeastClosure {
 public:
  explicit LeastClosure(const CompiledProgram& cp);

  /// Least set closed under the enabled rules. A literal element holds when the literal is in
  /// the set, a constant when it is #t, and a default literal when `default_holds[l]` is
  /// non-zero (never, when `default_holds` is null). Inspections must have been substituted.
  /// `work` is incremented once per element visit and rule firing.
  LiteralSet run(const std::vector<std::uint8_t>* disabled_rules,
                 const std::vector<std::uint8_t>* default_holds, std::size_t& work) const;

 private:
  struct Conj {
    std::size_t rule;
    std::uint32_t lit_count;
    bool blocked_static;
  };
  const CompiledProgram& cp_;
  std::vector<Conj> conjuncts_;
  std::vector<std::vector<std::size_t>> rule_conjuncts_;
  std::vector<std::vector<std::size_t>> occurrences_;      // LitId -> conjunct ids (with repeats)
  std::vector<std::vector<LitId>> conj_defaults_;          // conjunct id -> default literals
};

}  // namespace parasp::detail
