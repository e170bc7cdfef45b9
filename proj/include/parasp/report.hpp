#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parasp/hypotheses.hpp"
#include "parasp/semantics.hpp"
#include "parasp/wsm.hpp"

namespace parasp {

struct ModelReport {
  Interpretation model;
  std::map<Atom, TruthValue> atom_values;  // w^model over the program atoms
  std::optional<HypothesisSet> hypotheses;
  std::optional<HypothesisSet> final_hypotheses;
  std::vector<Literal> contradicted;
  std::map<std::string, double> scores;
};

/// Scores every built-in numeric criterion for `model` over `atoms`.
ModelReport make_report(const std::vector<Atom>& atoms, const Interpretation& model);
ModelReport make_report(const std::vector<Atom>& atoms, const Wsm4spResult& r);

/// inconsistent-count, unknown-count, lexicographic.
const std::vector<std::string>& ranking_criteria();

/// Stable ascending sort by the criterion's score, ties by canonical model order.
/// `lexicographic` sorts by canonical model order alone. Throws std::invalid_argument for an
/// unknown criterion.
std::vector<ModelReport> rank_models(std::vector<ModelReport> reports, const std::string& criterion);

struct ReportDocument {
  std::string program;
  std::string mode;
  std::vector<ModelReport> models;
  std::size_t atoms = 0;
  std::size_t rules = 0;
  std::size_t iterations = 0;
};

std::string to_json(const ReportDocument& doc, int indent = 2);
/// Throws std::invalid_argument on malformed documents.
ReportDocument report_from_json(std::string_view text);

/// Parses `{a, -b, p(x,y)}`. Throws ParseError.
Interpretation parse_interpretation(std::string_view text);

}  // namespace parasp
