#pragma once

#include <string>
#include <vector>

#include "gadgetforge/cnf.hpp"

namespace gf {

enum class Quantifier { Forall, Exists };

// Prenex QBF: outermost-first prefix over a CNF matrix. Every variable is
// quantified exactly once and the matrix mentions only quantified variables.
struct QbfFormula {
  std::vector<std::pair<Quantifier, int>> prefix;  // (quantifier, 1-based var)
  CnfFormula matrix;

  void validate() const;
};

QbfFormula parse_qdimacs(const std::string& text);
std::string print_qdimacs(const QbfFormula& q);

// Exact truth value by recursive expansion over the prefix: Forall is a
// conjunction over both values, Exists a disjunction. Guarded to ~20
// quantified variables.
bool eval_qbf(const QbfFormula& q, int max_vars = 20);

}  // namespace gf
