#include "parasp/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "parasp/parser.hpp"

namespace parasp {

using nlohmann::json;

ModelReport make_report(const std::vector<Atom>& atoms, const Interpretation& model) {
  ModelReport r;
  r.model = model;
  std::size_t inconsistent = 0, unknown = 0;
  for (const auto& a : atoms) {
    TruthValue v = model.value(a);
    r.atom_values.emplace(a, v);
    inconsistent += v == TruthValue::i;
    unknown += v == TruthValue::u;
  }
  r.scores["inconsistent-count"] = static_cast<double>(inconsistent);
  r.scores["unknown-count"] = static_cast<double>(unknown);
  return r;
}

ModelReport make_report(const std::vector<Atom>& atoms, const Wsm4spResult& res) {
  ModelReport r = make_report(atoms, res.model);
  r.hypotheses = res.initial;
  r.final_hypotheses = res.final_hypotheses;
  r.contradicted = res.contradicted;
  return r;
}

const std::vector<std::string>& ranking_criteria() {
  static const std::vector<std::string> names{"inconsistent-count", "unknown-count",
                                              "lexicographic"};
  return names;
}

std::vector<ModelReport> rank_models(std::vector<ModelReport> reports,
                                     const std::string& criterion) {
  const auto& names = ranking_criteria();
  if (std::find(names.begin(), names.end(), criterion) == names.end())
    throw std::invalid_argument("unknown ranking criterion '" + criterion + "'");
  auto score = [&](const ModelReport& r) {
    auto it = r.scores.find(criterion);
    return it == r.scores.end() ? 0.0 : it->second;
  };
  std::stable_sort(reports.begin(), reports.end(), [&](const ModelReport& a, const ModelReport& b) {
    if (criterion != "lexicographic") {
      double sa = score(a), sb = score(b);
      if (sa != sb) return sa < sb;
    }
    return a.model < b.model;
  });
  return reports;
}

namespace {

json hypotheses_json(const HypothesisSet& h) {
  json out = json::object();
  for (const auto& [l, a] : h.entries) out[l.to_string()] = to_string(a.value());
  return out;
}

HypothesisSet hypotheses_from(const json& j) {
  HypothesisSet h;
  for (const auto& [key, value] : j.items()) {
    auto v = truth_from_string(value.get<std::string>());
    Assumptions a;
    if (v == TruthValue::t) a = Assumptions::assume_true();
    else if (v == TruthValue::f) a = Assumptions::assume_false();
    else if (v == TruthValue::i) a = Assumptions::from_mask(Assumptions::kTrue | Assumptions::kFalse);
    else throw std::invalid_argument("bad hypothesis value for " + key);
    h.entries.emplace(parse_literal(key), a);
  }
  return h;
}

}  // namespace

std::string to_json(const ReportDocument& doc, int indent) {
  json models = json::array();
  for (const auto& m : doc.models) {
    json lits = json::array();
    for (const auto& l : m.model) lits.push_back(l.to_string());
    json values = json::object();
    for (const auto& [a, v] : m.atom_values) values[a.to_string()] = to_string(v);
    json contradicted = json::array();
    for (const auto& l : m.contradicted) contradicted.push_back(l.to_string());
    json entry{{"literals", lits},
               {"values", values},
               {"hypotheses", m.hypotheses ? hypotheses_json(*m.hypotheses) : json(nullptr)},
               {"contradicted", contradicted},
               {"scores", m.scores}};
    if (m.final_hypotheses) entry["final_hypotheses"] = hypotheses_json(*m.final_hypotheses);
    models.push_back(std::move(entry));
  }
  json out{{"program", doc.program},
           {"mode", doc.mode},
           {"models", models},
           {"stats", {{"atoms", doc.atoms}, {"rules", doc.rules}, {"iterations", doc.iterations}}}};
  return out.dump(indent);
}

ReportDocument report_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    ReportDocument doc;
    doc.program = j.at("program").get<std::string>();
    doc.mode = j.at("mode").get<std::string>();
    const auto& stats = j.at("stats");
    doc.atoms = stats.at("atoms").get<std::size_t>();
    doc.rules = stats.at("rules").get<std::size_t>();
    doc.iterations = stats.at("iterations").get<std::size_t>();
    for (const auto& m : j.at("models")) {
      ModelReport r;
      for (const auto& l : m.at("literals")) r.model.insert(parse_literal(l.get<std::string>()));
      for (const auto& [a, v] : m.at("values").items()) {
        auto tv = truth_from_string(v.get<std::string>());
        if (!tv) throw std::invalid_argument("bad truth value for " + a);
        r.atom_values.emplace(parse_literal(a).atom, *tv);
      }
      if (!m.at("hypotheses").is_null()) r.hypotheses = hypotheses_from(m.at("hypotheses"));
      if (m.contains("final_hypotheses"))
        r.final_hypotheses = hypotheses_from(m.at("final_hypotheses"));
      for (const auto& l : m.at("contradicted"))
        r.contradicted.push_back(parse_literal(l.get<std::string>()));
      for (const auto& [k, v] : m.at("scores").items()) r.scores[k] = v.get<double>();
      doc.models.push_back(std::move(r));
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed literal in report: ") + e.what());
  }
}

Interpretation parse_interpretation(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{' || text[last] != '}')
    throw ParseError("expected a literal set in braces", 1, 1);
  std::string_view inner = text.substr(first + 1, last - first - 1);
  Interpretation I;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= inner.size(); ++k) {
    char c = k < inner.size() ? inner[k] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != ',' || depth != 0) continue;
    std::string_view piece = inner.substr(start, k - start);
    start = k + 1;
    if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      if (k < inner.size() || I.size() > 0) throw ParseError("empty literal in set", 1, static_cast<int>(k + 2));
      continue;
    }
    I.insert(parse_literal(piece));
  }
  return I;
}

}  // namespace parasp
