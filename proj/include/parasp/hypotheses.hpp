#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "parasp/syntax.hpp"

namespace parasp {

/// The assumptions held about one default literal `not l`: assumed t, assumed f, or both.
class Assumptions {
 public:
  static constexpr std::uint8_t kTrue = 1;
  static constexpr std::uint8_t kFalse = 2;

  constexpr Assumptions() = default;
  static constexpr Assumptions assume_true() { return Assumptions(kTrue); }
  static constexpr Assumptions assume_false() { return Assumptions(kFalse); }
  static constexpr Assumptions from_mask(std::uint8_t m) { return Assumptions(m & 3); }

  constexpr bool has_true() const { return (mask_ & kTrue) != 0; }
  constexpr bool has_false() const { return (mask_ & kFalse) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contradicted() const { return mask_ == (kTrue | kFalse); }
  constexpr std::uint8_t mask() const { return mask_; }
  constexpr void add(Assumptions o) { mask_ |= o.mask_; }

  /// t for {assumed-t}, f for {assumed-f}, i for both. Undefined (u) when empty.
  constexpr TruthValue value() const {
    switch (mask_) {
      case kTrue: return TruthValue::t;
      case kFalse: return TruthValue::f;
      case kTrue | kFalse: return TruthValue::i;
      default: return TruthValue::u;
    }
  }

  friend constexpr bool operator==(Assumptions a, Assumptions b) { return a.mask_ == b.mask_; }

 private:
  explicit constexpr Assumptions(std::uint8_t m) : mask_(m) {}
  std::uint8_t mask_ = 0;
};

/// Hypotheses about default literals, keyed by the literal under `not`.
struct HypothesisSet {
  std::map<Literal, Assumptions> entries;

  /// Nullptr when the literal is not covered.
  const Assumptions* find(const Literal& l) const {
    auto it = entries.find(l);
    return it == entries.end() ? nullptr : &it->second;
  }
  /// Literals whose hypotheses were contradicted (carry both assumptions).
  std::vector<Literal> contradicted() const;
  /// One `assume not l = v.` line per single-assumption entry; contradicted entries print `= i`.
  std::string to_string() const;

  bool operator==(const HypothesisSet&) const = default;
};

class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads `assume not <literal> = t .` / `assume not <literal> = f .` statements and checks that
/// they cover exactly the default-negated literals of the ground program `p`.
HypothesisSet parse_hypotheses(std::string_view text, const Program& p);

/// Builds a hypothesis set from explicit values; each value must be t or f.
HypothesisSet make_hypotheses(const std::map<Literal, TruthValue>& values);

}  // namespace parasp
