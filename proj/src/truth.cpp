#include "parasp/truth.hpp"

namespace parasp {

namespace {

constexpr auto F = TruthValue::f;
constexpr auto U = TruthValue::u;
constexpr auto I = TruthValue::i;
constexpr auto T = TruthValue::t;

constexpr std::size_t idx(TruthValue v) { return static_cast<std::size_t>(v); }

// Row/column order: f, u, i, t.
constexpr std::array<TruthValue, 4> kStrongNeg = {T, U, I, F};
constexpr std::array<TruthValue, 4> kDefaultNeg = {T, T, I, F};

// Rows are antecedents.
constexpr std::array<std::array<TruthValue, 4>, 4> kImplies = {{
    {T, T, T, T},
    {T, T, T, T},
    {F, F, T, F},
    {F, F, T, T},
}};

using Table = std::array<std::array<bool, 4>, 4>;

constexpr Table kLeqK = {{
    {true, true, false, true},
    {false, true, false, true},
    {false, false, false, false},
    {false, false, false, true},
}};
constexpr Table kLeqP = {{
    {true, false, true, true},
    {false, false, false, false},
    {false, false, true, true},
    {false, false, false, true},
}};
constexpr Table kLeqL = {{
    {true, true, true, true},
    {false, true, true, true},
    {false, false, true, true},
    {false, false, false, true},
}};
constexpr Table kLeqB = {{
    {true, true, true, true},
    {false, true, false, true},
    {false, false, true, true},
    {false, false, false, true},
}};

using OpTable = std::array<std::array<TruthValue, 4>, 4>;

// Entries outside the carrier are never read; they hold f as filler.
constexpr OpTable kGlbK = {{
    {F, F, F, F},
    {F, U, F, U},
    {F, F, F, F},
    {F, U, F, T},
}};
constexpr OpTable kLubK = {{
    {F, U, F, T},
    {U, U, F, T},
    {F, F, F, F},
    {T, T, F, T},
}};
constexpr OpTable kGlbP = {{
    {F, F, F, F},
    {F, F, F, F},
    {F, F, I, I},
    {F, F, I, T},
}};
constexpr OpTable kLubP = {{
    {F, F, I, T},
    {F, F, F, F},
    {I, F, I, T},
    {T, F, T, T},
}};
constexpr OpTable kGlbL = {{
    {F, F, F, F},
    {F, U, U, U},
    {F, U, I, I},
    {F, U, I, T},
}};
constexpr OpTable kLubL = {{
    {F, U, I, T},
    {U, U, I, T},
    {I, I, I, T},
    {T, T, T, T},
}};
constexpr OpTable kGlbB = {{
    {F, F, F, F},
    {F, U, F, U},
    {F, F, I, I},
    {F, U, I, T},
}};
constexpr OpTable kLubB = {{
    {F, U, I, T},
    {U, U, T, T},
    {I, T, I, T},
    {T, T, T, T},
}};

const Table& leq_table(OrderingKind k) {
  switch (k) {
    case OrderingKind::K: return kLeqK;
    case OrderingKind::P: return kLeqP;
    case OrderingKind::L: return kLeqL;
    case OrderingKind::B: break;
  }
  return kLeqB;
}

const OpTable& glb_table(OrderingKind k) {
  switch (k) {
    case OrderingKind::K: return kGlbK;
    case OrderingKind::P: return kGlbP;
    case OrderingKind::L: return kGlbL;
    case OrderingKind::B: break;
  }
  return kGlbB;
}

const OpTable& lub_table(OrderingKind k) {
  switch (k) {
    case OrderingKind::K: return kLubK;
    case OrderingKind::P: return kLubP;
    case OrderingKind::L: return kLubL;
    case OrderingKind::B: break;
  }
  return kLubB;
}

}  // namespace

char to_char(TruthValue v) {
  static constexpr char kChars[] = {'f', 'u', 'i', 't'};
  return kChars[idx(v)];
}

std::string to_string(TruthValue v) { return std::string(1, to_char(v)); }

std::optional<TruthValue> truth_from_string(std::string_view s) {
  if (s == "f") return F;
  if (s == "u") return U;
  if (s == "i") return I;
  if (s == "t") return T;
  return std::nullopt;
}

std::vector<TruthValue> TruthSet::values() const {
  std::vector<TruthValue> out;
  for (auto v : kAllTruthValues)
    if (contains(v)) out.push_back(v);
  return out;
}

TruthSet TruthOrdering::carrier() const {
  switch (kind_) {
    case OrderingKind::K: return {F, U, T};
    case OrderingKind::P: return {F, I, T};
    case OrderingKind::L:
    case OrderingKind::B: break;
  }
  return {F, U, I, T};
}

void TruthOrdering::require(TruthValue a, TruthValue b) const {
  auto c = carrier();
  if (!c.contains(a) || !c.contains(b))
    throw DomainError("truth value outside the carrier of ordering " + name() + ": (" +
                      to_string(a) + ", " + to_string(b) + ")");
}

bool TruthOrdering::leq(TruthValue a, TruthValue b) const {
  require(a, b);
  return leq_table(kind_)[idx(a)][idx(b)];
}

TruthValue TruthOrdering::glb(TruthValue a, TruthValue b) const {
  require(a, b);
  return glb_table(kind_)[idx(a)][idx(b)];
}

TruthValue TruthOrdering::lub(TruthValue a, TruthValue b) const {
  require(a, b);
  return lub_table(kind_)[idx(a)][idx(b)];
}

std::string TruthOrdering::name() const {
  switch (kind_) {
    case OrderingKind::K: return "K";
    case OrderingKind::P: return "P";
    case OrderingKind::L: return "L";
    case OrderingKind::B: break;
  }
  return "B";
}

std::string Logic::display_name() const {
  switch (name) {
    case LogicName::K3: return "K3+";
    case LogicName::P3: return "P3+";
    case LogicName::L4: return "L4+";
    case LogicName::B4: break;
  }
  return "B4+";
}

Logic Logic::k3() { return {LogicName::K3, TruthOrdering(OrderingKind::K), {T}}; }
Logic Logic::p3() { return {LogicName::P3, TruthOrdering(OrderingKind::P), {I, T}}; }
Logic Logic::l4() { return {LogicName::L4, TruthOrdering(OrderingKind::L), {I, T}}; }
Logic Logic::b4() { return {LogicName::B4, TruthOrdering(OrderingKind::B), {I, T}}; }

TruthValue strong_neg(TruthValue v) { return kStrongNeg[idx(v)]; }
TruthValue default_neg(TruthValue v) { return kDefaultNeg[idx(v)]; }
TruthValue implies(TruthValue a, TruthValue b) { return kImplies[idx(a)][idx(b)]; }
TruthValue conj(TruthValue a, TruthValue b, TruthOrdering ord) { return ord.glb(a, b); }
TruthValue disj(TruthValue a, TruthValue b, TruthOrdering ord) { return ord.lub(a, b); }

}  // namespace parasp
