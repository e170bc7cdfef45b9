#include "parasp/asp_oracle.hpp"

#include <algorithm>

#include "least.hpp"
#include "parasp/compiled.hpp"
#include "parasp/language.hpp"

namespace parasp {

Interpretation generate_least(const Program& p) {
  if (p.has_default_negation() || p.has_inspection())
    throw OracleError("generate_least needs a program without 'not' and 'in'");
  CompiledProgram cp(p);
  detail::LeastClosure closure(cp);
  std::size_t work = 0;
  return to_interpretation(cp, closure.run(nullptr, nullptr, work));
}

Program reduct(const Program& p, const Interpretation& I) {
  if (!I.consistent()) throw OracleError("reduct needs a consistent interpretation");
  Program out = p;
  for (auto& r : out.rules)
    for (auto& c : r.body)
      for (auto& e : c)
        if (auto* d = std::get_if<DefaultElement>(&e))
          e = ConstElement{default_neg(I.value(d->literal))};
  return out;
}

std::vector<Interpretation> enumerate_answer_sets(const Program& p, std::size_t cap,
                                                  std::size_t atom_bound) {
  if (!p.is_ground()) throw OracleError("program must be ground");
  if (!has_asp_syntax(p)) throw OracleError("program is not a normal ASP program");
  CompiledProgram cp(p);
  if (cp.atom_count() > atom_bound)
    throw OracleError("program has " + std::to_string(cp.atom_count()) +
                      " atoms, above the brute-force bound of " + std::to_string(atom_bound));

  const auto& defaults = cp.default_literals();
  detail::LeastClosure closure(cp);
  std::vector<std::uint8_t> holds(cp.literal_count(), 0);
  std::vector<LiteralSet> found;
  std::size_t work = 0;
  const std::uint64_t combos = std::uint64_t{1} << defaults.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    // Bit k set: defaults[k] is in the candidate, so `not defaults[k]` is f.
    for (std::size_t k = 0; k < defaults.size(); ++k) holds[defaults[k]] = !((mask >> k) & 1);
    LiteralSet m = closure.run(nullptr, &holds, work);
    bool ok = true;
    for (AtomId a = 0; ok && a < cp.atom_count(); ++a)
      ok = m.atom_value(a) != TruthValue::i;
    for (std::size_t k = 0; ok && k < defaults.size(); ++k)
      ok = m.contains(defaults[k]) == static_cast<bool>((mask >> k) & 1);
    if (ok) found.push_back(std::move(m));
  }

  std::vector<Interpretation> out;
  out.reserve(found.size());
  for (const auto& m : found) out.push_back(to_interpretation(cp, m));
  std::sort(out.begin(), out.end());
  if (cap && out.size() > cap) out.resize(cap);
  return out;
}

}  // namespace parasp
