#include "parasp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parasp/asp_oracle.hpp"
#include "parasp/language.hpp"
#include "parasp/parser.hpp"
#include "parasp/report.hpp"
#include "parasp/stratify.hpp"
#include "parasp/wsm.hpp"

namespace parasp::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Program load_program(const std::string& path) {
  std::string text = read_file(path);
  try {
    return ground(parse_program(text));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

struct Options {
  std::string file;
  std::string mode;
  std::string kind = "I";
  std::string hypotheses;
  std::string enumerate = "1";
  std::string strategy = "lex";
  std::uint64_t seed = 0;
  std::string score;
  std::string model;
  bool json = false;
};

std::size_t parse_count(const std::string& s) {
  if (s == "all") return 0;
  try {
    std::size_t used = 0;
    long long n = std::stoll(s, &used);
    if (used == s.size() && n > 0) return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
  }
  throw InputError("--enumerate expects a positive number or 'all', got '" + s + "'");
}

void emit(const Options& o, ReportDocument doc, std::ostream& out) {
  if (!o.score.empty()) doc.models = rank_models(std::move(doc.models), o.score);
  if (o.json) {
    out << to_json(doc) << "\n";
    return;
  }
  for (const auto& m : doc.models) out << m.model.to_string() << "\n";
}

int cmd_parse(const Options& o, std::ostream& out, std::ostream& err) {
  Program p = parse_program(read_file(o.file));
  Dialect d = p.is_ground() ? classify_dialect(p) : classify_dialect(ground(p));
  if (o.json) {
    nlohmann::json j{{"program", o.file}, {"rules", p.rules.size()}, {"dialect", to_string(d)},
                     {"text", p.to_string()}};
    out << j.dump(2) << "\n";
  } else {
    out << p.to_string() << "% dialect: " << to_string(d) << "\n";
  }
  (void)err;
  return ok;
}

int cmd_ground(const Options& o, std::ostream& out) {
  Program p = load_program(o.file);
  out << p.to_string();
  return ok;
}

int cmd_stratify(const Options& o, std::ostream& out) {
  Program p = load_program(o.file);
  ExpressionKind kind = o.kind == "D" ? ExpressionKind::defaults : ExpressionKind::inspections;
  auto s = find_stratification(p, kind);
  if (!s) {
    out << "not stratifiable\n";
    return no_result;
  }
  if (o.json) {
    nlohmann::json strata = nlohmann::json::array();
    for (std::size_t k = 0; k < s->strata.size(); ++k) {
      nlohmann::json defines = nlohmann::json::array();
      for (const auto& a : defined_atoms(p, *s, k)) defines.push_back(a.to_string());
      strata.push_back({{"rules", s->strata[k]}, {"defines", defines}});
    }
    out << strata.dump(2) << "\n";
    return ok;
  }
  for (std::size_t k = 0; k < s->strata.size(); ++k) {
    out << "S" << k + 1 << ":";
    for (auto r : s->strata[k]) out << " " << r;
    out << "  %";
    for (const auto& a : defined_atoms(p, *s, k)) out << " " << a.to_string();
    out << "\n";
  }
  return ok;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  Program p = load_program(o.file);
  ReportDocument doc;
  doc.program = o.file;
  doc.mode = o.mode;
  doc.rules = p.rules.size();
  auto atoms = p.atoms();
  doc.atoms = atoms.size();
  const std::size_t cap = parse_count(o.enumerate);

  if (o.mode == "asp") {
    if (!has_asp_syntax(p))
      throw InputError("mode asp needs single-conjunct bodies without 'in' or #i");
    for (const auto& I : enumerate_answer_sets(p, cap)) doc.models.push_back(make_report(atoms, I));
  } else if (o.mode == "4ql") {
    if (p.has_default_negation())
      throw InputError("mode 4ql does not accept 'not'; use mode 4sp or 'in {f,u}'");
    EngineStats stats;
    doc.models.push_back(make_report(atoms, generate_wsm_4ql(p, &stats)));
    doc.iterations = stats.iterations;
  } else {
    auto guards = guard_violations(p);
    if (!guards.empty())
      err << "warning: " << guards.size() << " rule(s) have default literals without a guard\n";
    if (!o.hypotheses.empty()) {
      std::string text = read_file(o.hypotheses);
      HypothesisSet h;
      try {
        h = parse_hypotheses(text, p);
      } catch (const ParseError& e) {
        throw InputError(o.hypotheses + ":" + e.what());
      }
      auto res = generate_wsm_4sp(p, h);
      doc.iterations = res.stats.iterations;
      doc.models.push_back(make_report(atoms, res));
    } else {
      EnumerationOptions eo;
      eo.cap = cap;
      eo.seed = o.seed;
      eo.strategy = o.strategy == "random"       ? Strategy::random
                    : o.strategy == "exhaustive" ? Strategy::exhaustive
                                                 : Strategy::lex;
      for (const auto& res : enumerate_4sp_models(p, eo)) {
        doc.iterations += res.stats.iterations;
        doc.models.push_back(make_report(atoms, res));
      }
    }
  }
  if (doc.models.empty()) {
    err << "no model\n";
    if (o.json) out << to_json(doc) << "\n";
    return no_result;
  }
  emit(o, std::move(doc), out);
  return ok;
}

std::vector<Interpretation> read_models(const std::string& path) {
  std::string text = read_file(path);
  std::vector<Interpretation> out;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{' && text.find("\"models\"") != std::string::npos) {
    for (auto& m : report_from_json(text).models) out.push_back(std::move(m.model));
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_interpretation(line));
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  Program p = load_program(o.file);
  if (p.has_default_negation() || p.has_inspection())
    throw InputError("check-wsm needs a program without 'not' and 'in'");
  std::vector<Interpretation> models;
  if (o.model.empty()) models.push_back(generate_wsm_4ql(p));
  else models = read_models(o.model);
  bool all = !models.empty();
  for (const auto& I : models) {
    Verdict v = check_well_supported(p, I);
    out << to_string(v) << " " << I.to_string() << "\n";
    all &= v == Verdict::yes;
  }
  return all ? ok : no_result;
}

int cmd_rank(const Options& o, std::ostream& out) {
  ReportDocument doc = report_from_json(read_file(o.file));
  Options ranked = o;
  if (ranked.score.empty()) ranked.score = "lexicographic";
  emit(ranked, std::move(doc), out);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paraconsistent rule engine: answer sets, 4QL and 4SP well-supported models", "parasp"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "Parse a program and report its dialect");
  auto* ground_cmd = app.add_subcommand("ground", "Print the ground program");
  auto* stratify = app.add_subcommand("stratify", "Find a stratification of the ground program");
  auto* solve = app.add_subcommand("solve", "Generate models");
  auto* check = app.add_subcommand("check-wsm", "Check well-supportedness of models");
  auto* rank = app.add_subcommand("rank", "Rank the models of a JSON report");

  for (auto* sub : {parse, ground_cmd, stratify, solve, check})
    sub->add_option("program", o.file, "Program file")->required();
  rank->add_option("report", o.file, "JSON report produced by solve --json")->required();
  for (auto* sub : {parse, stratify, solve, rank}) sub->add_flag("--json", o.json, "JSON output");

  stratify->add_option("--kind", o.kind, "Expressions that must refer to lower strata")
      ->check(CLI::IsMember({"D", "I"}));
  solve->add_option("--mode", o.mode, "Semantics")
      ->required()
      ->check(CLI::IsMember({"asp", "4ql", "4sp"}));
  solve->add_option("--hypotheses", o.hypotheses, "Hypothesis file (4sp mode)");
  solve->add_option("--enumerate", o.enumerate, "Number of models, or 'all'");
  solve->add_option("--strategy", o.strategy, "Hypothesis order (4sp mode)")
      ->check(CLI::IsMember({"lex", "random", "exhaustive"}));
  solve->add_option("--seed", o.seed, "Seed for the random strategy");
  for (auto* sub : {solve, rank})
    sub->add_option("--score", o.score, "Ranking criterion")
        ->check(CLI::IsMember(ranking_criteria()));
  check->add_option("--model", o.model, "Models to check: JSON report or one {..} set per line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return input_error;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out, err);
    if (ground_cmd->parsed()) return cmd_ground(o, out);
    if (stratify->parsed()) return cmd_stratify(o, out);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (check->parsed()) return cmd_check(o, out);
    if (rank->parsed()) return cmd_rank(o, out);
  } catch (const ParseError& e) {
    err << "error: " << o.file << ":" << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace parasp::cli
