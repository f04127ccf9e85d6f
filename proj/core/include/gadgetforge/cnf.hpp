#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gadgetforge/formula.hpp"

namespace gf {

// Clausal formula. Literals are nonzero signed 1-based variable indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int max_clause_width() const;
  void validate() const;  // throws std::runtime_error on malformed literals
};

struct TseytinResult {
  CnfFormula cnf;
  std::vector<std::string> input_vars;        // original variables, index = var id - 1
  std::map<int, std::string> aux_bindings;    // aux var id -> printed subformula
};

// Tseytin encoding; equisatisfiable, every clause width <= 3 (wide clauses
// split with chain variables). Input variables occupy ids 1..n in
// first-appearance order.
TseytinResult to_cnf_tseytin(const FormulaPtr& f);

CnfFormula parse_dimacs(const std::string& text);
std::string print_dimacs(const CnfFormula& cnf);

// Splits clauses wider than 3 with fresh chain variables; equisatisfiable.
CnfFormula to_3cnf(const CnfFormula& cnf);

bool eval_cnf(const CnfFormula& cnf, const std::vector<bool>& assignment);

}  // namespace gf
