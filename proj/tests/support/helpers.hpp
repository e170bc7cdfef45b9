#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "parasp/language.hpp"
#include "parasp/parser.hpp"
#include "parasp/report.hpp"
#include "parasp/semantics.hpp"

namespace parasp::testing {

inline Program prog(std::string_view text) { return ground(parse_program(text)); }
inline Interpretation interp(std::string_view text) { return parse_interpretation(text); }
inline Literal lit(std::string_view text) { return parse_literal(text); }
inline Atom atom(std::string_view text) { return parse_literal(text).atom; }

inline std::string data_path(const std::string& name) { return std::string(PARASP_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Program data_program(const std::string& name) { return prog(slurp(data_path(name))); }

}  // namespace parasp::testing
