#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parasp/asp_oracle.hpp"
#include "parasp/cli.hpp"
#include "parasp/language.hpp"
#include "parasp/parser.hpp"
#include "parasp/report.hpp"
#include "parasp/stratify.hpp"
#include "parasp/wsm.hpp"

namespace py = pybind11;
using namespace parasp;

namespace {

std::vector<std::string> literal_strings(const Interpretation& I) {
  std::vector<std::string> out;
  for (const auto& l : I) out.push_back(l.to_string());
  return out;
}

ExpressionKind kind_from(const std::string& k) {
  if (k == "D") return ExpressionKind::defaults;
  if (k == "I") return ExpressionKind::inspections;
  throw py::value_error("kind must be 'D' or 'I'");
}

Strategy strategy_from(const std::string& s) {
  if (s == "lex") return Strategy::lex;
  if (s == "random") return Strategy::random;
  if (s == "exhaustive") return Strategy::exhaustive;
  throw py::value_error("strategy must be lex, random or exhaustive");
}

py::dict result_dict(const Wsm4spResult& r) {
  py::dict d;
  d["model"] = r.model;
  d["hypotheses"] = r.initial.to_string();
  d["final_hypotheses"] = r.final_hypotheses.to_string();
  std::vector<std::string> contradicted;
  for (const auto& l : r.contradicted) contradicted.push_back(l.to_string());
  d["contradicted"] = contradicted;
  d["iterations"] = r.stats.iterations;
  d["body_evaluations"] = r.stats.body_evaluations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_parasp, m) {
  m.doc() = "Paraconsistent rule engine: answer sets, 4QL and 4SP well-supported models";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GroundingError>(m, "GroundingError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<EngineError>(m, "EngineError", PyExc_ValueError);
  py::register_exception<OracleError>(m, "OracleError", PyExc_ValueError);

  py::class_<Interpretation>(m, "Interpretation")
      .def(py::init([](const std::string& text) { return parse_interpretation(text); }),
           py::arg("text") = "{}")
      .def_property_readonly("literals", &literal_strings)
      .def("value", [](const Interpretation& I, const std::string& atom) {
        return to_string(I.value(parse_literal(atom).atom));
      })
      .def("consistent", &Interpretation::consistent)
      .def("__contains__", [](const Interpretation& I, const std::string& l) {
        return I.contains(parse_literal(l));
      })
      .def("__len__", &Interpretation::size)
      .def("__eq__", [](const Interpretation& a, const Interpretation& b) { return a == b; })
      .def("__hash__", [](const Interpretation& I) { return py::hash(py::str(I.to_string())); })
      .def("__str__", &Interpretation::to_string)
      .def("__repr__", [](const Interpretation& I) { return "Interpretation('" + I.to_string() + "')"; });

  py::class_<Program>(m, "Program")
      .def_property_readonly("rule_count", [](const Program& p) { return p.rules.size(); })
      .def_property_readonly("atoms", [](const Program& p) {
        std::vector<std::string> out;
        for (const auto& a : p.atoms()) out.push_back(a.to_string());
        return out;
      })
      .def_property_readonly("default_literals", [](const Program& p) {
        std::vector<std::string> out;
        for (const auto& l : p.default_literals()) out.push_back(l.to_string());
        return out;
      })
      .def("is_ground", &Program::is_ground)
      .def("__eq__", [](const Program& a, const Program& b) { return a == b; })
      .def("__str__", &Program::to_string);

  m.def("parse_program", [](const std::string& text) { return parse_program(text); }, py::arg("text"));
  m.def("ground", &ground, py::arg("program"));
  m.def("load", [](const std::string& text) { return ground(parse_program(text)); }, py::arg("text"),
        "Parse and ground a program");
  m.def("classify_dialect", [](const Program& p) { return to_string(classify_dialect(p)); });

  m.def("find_stratification", [](const Program& p, const std::string& kind)
            -> std::optional<std::vector<std::vector<std::size_t>>> {
          auto s = find_stratification(p, kind_from(kind));
          if (!s) return std::nullopt;
          return s->strata;
        }, py::arg("program"), py::arg("kind") = "I");

  m.def("generate_least", &generate_least, py::arg("program"));
  m.def("answer_sets", [](const Program& p, std::size_t cap) { return enumerate_answer_sets(p, cap); },
        py::arg("program"), py::arg("cap") = 0);

  m.def("wsm_4ql", [](const Program& p) { return generate_wsm_4ql(p); }, py::arg("program"));
  m.def("find_correction", &find_correction, py::arg("program"), py::arg("interpretation"));
  m.def("wsm_4sp", [](const Program& p, const std::string& hypotheses) {
          return result_dict(generate_wsm_4sp(p, parse_hypotheses(hypotheses, p)));
        }, py::arg("program"), py::arg("hypotheses"),
        "Model for hypotheses given in the `assume not l = t.` file syntax");
  m.def("enumerate_4sp", [](const Program& p, const std::string& strategy, std::size_t cap,
                            std::uint64_t seed) {
          EnumerationOptions o;
          o.strategy = strategy_from(strategy);
          o.cap = cap;
          o.seed = seed;
          py::list out;
          for (const auto& r : enumerate_4sp_models(p, o)) out.append(result_dict(r));
          return out;
        }, py::arg("program"), py::arg("strategy") = "lex", py::arg("cap") = 0, py::arg("seed") = 0);
  m.def("check_well_supported", [](const Program& p, const Interpretation& I) {
          return to_string(check_well_supported(p, I));
        }, py::arg("program"), py::arg("interpretation"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int status = cli::run(args, out, err);
          return py::make_tuple(status, out.str(), err.str());
        }, py::arg("args"), "Run a command line; returns (status, stdout, stderr)");
}
