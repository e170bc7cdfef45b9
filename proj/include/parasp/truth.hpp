#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parasp {

/// The four truth values: false, unknown, inconsistent, true.
enum class TruthValue : std::uint8_t { f = 0, u = 1, i = 2, t = 3 };

inline constexpr std::array<TruthValue, 4> kAllTruthValues = {TruthValue::f, TruthValue::u,
                                                              TruthValue::i, TruthValue::t};

char to_char(TruthValue v);
std::string to_string(TruthValue v);
/// Accepts "t", "f", "u", "i". Returns nullopt on anything else.
std::optional<TruthValue> truth_from_string(std::string_view s);

/// A subset of {f,u,i,t}, stored as a 4-bit mask.
class TruthSet {
 public:
  constexpr TruthSet() = default;
  constexpr TruthSet(std::initializer_list<TruthValue> values) {
    for (auto v : values) insert(v);
  }
  static constexpr TruthSet from_mask(std::uint8_t mask) {
    TruthSet s;
    s.mask_ = mask & 0xF;
    return s;
  }

  constexpr void insert(TruthValue v) { mask_ |= bit(v); }
  constexpr bool contains(TruthValue v) const { return (mask_ & bit(v)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint8_t mask() const { return mask_; }
  std::vector<TruthValue> values() const;

  friend constexpr bool operator==(TruthSet a, TruthSet b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator<(TruthSet a, TruthSet b) { return a.mask_ < b.mask_; }

 private:
  static constexpr std::uint8_t bit(TruthValue v) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v));
  }
  std::uint8_t mask_ = 0;
};

/// Thrown when a lattice operation receives a value outside the ordering's carrier.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class OrderingKind : std::uint8_t {
  K,  ///< Kleene: f < u < t
  P,  ///< Priest: f < i < t
  L,  ///< linear: f < u < i < t
  B,  ///< Belnap truth order: f < u,i < t with u, i incomparable
};

/// One of the four truth orderings. All tables are explicit.
class TruthOrdering {
 public:
  explicit constexpr TruthOrdering(OrderingKind kind) : kind_(kind) {}

  constexpr OrderingKind kind() const { return kind_; }
  TruthSet carrier() const;
  bool in_carrier(TruthValue v) const { return carrier().contains(v); }

  /// Partial order test. Throws DomainError outside the carrier.
  bool leq(TruthValue a, TruthValue b) const;
  /// Greatest lower bound. Throws DomainError outside the carrier.
  TruthValue glb(TruthValue a, TruthValue b) const;
  /// Least upper bound. Throws DomainError outside the carrier.
  TruthValue lub(TruthValue a, TruthValue b) const;

  std::string name() const;

  friend constexpr bool operator==(TruthOrdering a, TruthOrdering b) { return a.kind_ == b.kind_; }

 private:
  void require(TruthValue a, TruthValue b) const;
  OrderingKind kind_;
};

enum class LogicName : std::uint8_t { K3, P3, L4, B4 };

/// A named logic: carrier, ordering and designated values.
struct Logic {
  LogicName name;
  TruthOrdering ordering;
  TruthSet designated;

  TruthSet carrier() const { return ordering.carrier(); }
  bool is_designated(TruthValue v) const { return designated.contains(v); }
  std::string display_name() const;

  static Logic k3();
  static Logic p3();
  static Logic l4();
  static Logic b4();
};

/// Strong (classical) negation.
TruthValue strong_neg(TruthValue v);
/// Four-valued default negation.
TruthValue default_neg(TruthValue v);
/// Implication; only ever yields f or t.
TruthValue implies(TruthValue a, TruthValue b);
TruthValue conj(TruthValue a, TruthValue b, TruthOrdering ord);
TruthValue disj(TruthValue a, TruthValue b, TruthOrdering ord);

}  // namespace parasp
