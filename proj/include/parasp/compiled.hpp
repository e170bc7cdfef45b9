#pragma once

// Indexed form of a ground program. Atoms get dense ids in canonical (sorted) order and
// literals are encoded as 2*atom + sign, so sorting literal ids sorts literals canonically.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "parasp/hypotheses.hpp"
#include "parasp/semantics.hpp"
#include "parasp/syntax.hpp"

namespace parasp {

using AtomId = std::uint32_t;
using LitId = std::uint32_t;

constexpr LitId lit_id(AtomId a, bool negated) { return 2 * a + (negated ? 1 : 0); }
constexpr AtomId atom_of(LitId l) { return l / 2; }
constexpr bool is_negated(LitId l) { return (l & 1) != 0; }
constexpr LitId complement(LitId l) { return l ^ 1; }

struct CompiledElement {
  enum class Kind : std::uint8_t { lit, default_lit, inspect, constant };
  Kind kind;
  LitId lit = 0;
  TruthSet values;                     // inspect
  TruthValue value = TruthValue::t;    // constant
};

struct CompiledRule {
  LitId head;
  std::vector<std::vector<CompiledElement>> body;
};

class CompiledProgram {
 public:
  /// `p` must be ground. `extra_atoms` are indexed even if the program does not mention them.
  explicit CompiledProgram(const Program& p, std::span<const Atom> extra_atoms = {});

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t literal_count() const { return 2 * atoms_.size(); }
  const std::vector<CompiledRule>& rules() const { return rules_; }
  const Atom& atom(AtomId a) const { return atoms_[a]; }
  Literal literal(LitId l) const { return Literal(atoms_[atom_of(l)], is_negated(l)); }
  /// Throws std::out_of_range for a literal over an unknown atom.
  LitId lit(const Literal& l) const;
  bool knows(const Atom& a) const { return index_.count(a) != 0; }

  /// Rules whose body mentions the atom (either sign, any element kind).
  const std::vector<std::size_t>& rules_mentioning(AtomId a) const { return mentions_[a]; }
  /// Distinct literals under default negation, ascending.
  const std::vector<LitId>& default_literals() const { return default_lits_; }
  bool has_inspection() const { return has_inspection_; }
  bool has_default() const { return !default_lits_.empty(); }

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, AtomId> index_;
  std::vector<CompiledRule> rules_;
  std::vector<std::vector<std::size_t>> mentions_;
  std::vector<LitId> default_lits_;
  bool has_inspection_ = false;
};

/// Membership set over the literals of a compiled program.
class LiteralSet {
 public:
  LiteralSet() = default;
  explicit LiteralSet(std::size_t literal_count) : bits_(literal_count, 0) {}

  bool contains(LitId l) const { return bits_[l] != 0; }
  /// Returns true when the literal was not present before.
  bool insert(LitId l) {
    if (bits_[l]) return false;
    bits_[l] = 1;
    ++size_;
    return true;
  }
  void insert_all(const LiteralSet& o) {
    for (LitId l = 0; l < o.bits_.size(); ++l)
      if (o.bits_[l]) insert(l);
  }
  TruthValue atom_value(AtomId a) const {
    bool pos = bits_[lit_id(a, false)], neg = bits_[lit_id(a, true)];
    if (pos) return neg ? TruthValue::i : TruthValue::t;
    return neg ? TruthValue::f : TruthValue::u;
  }
  TruthValue value(LitId l) const {
    TruthValue v = atom_value(atom_of(l));
    return is_negated(l) ? strong_neg(v) : v;
  }
  std::size_t size() const { return size_; }
  std::size_t capacity() const { return bits_.size(); }
  bool operator==(const LiteralSet& o) const { return bits_ == o.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t size_ = 0;
};

/// Per-literal assumption masks (see Assumptions); 0 marks literals outside the hypothesis set.
using HypothesisState = std::vector<std::uint8_t>;

Interpretation to_interpretation(const CompiledProgram& cp, const LiteralSet& s);
/// Throws std::out_of_range for literals over atoms the program does not index.
LiteralSet to_literal_set(const CompiledProgram& cp, const Interpretation& I);
HypothesisState to_hypothesis_state(const CompiledProgram& cp, const HypothesisSet& h);
HypothesisSet to_hypothesis_set(const CompiledProgram& cp, const HypothesisState& h);

}  // namespace parasp
