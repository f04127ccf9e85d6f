#pragma once

// Brute-force reference oracles used by the tests. These deliberately share
// no code with the implementation paths they check.

#include <cstdint>
#include <set>
#include <vector>

#include "gadgetforge/akari.hpp"
#include "gadgetforge/cnf.hpp"
#include "gadgetforge/formula.hpp"
#include "gadgetforge/grid.hpp"
#include "gadgetforge/qbf.hpp"

namespace gf::test {

inline std::vector<std::vector<bool>> all_assignments(int n) {
  std::vector<std::vector<bool>> out;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = (m >> (n - 1 - j)) & 1;
    out.push_back(a);
  }
  return out;
}

inline std::vector<std::vector<bool>> formula_models(const FormulaPtr& f) {
  auto vars = formula_vars(f);
  std::vector<std::vector<bool>> models;
  for (auto& a : all_assignments(static_cast<int>(vars.size())))
    if (eval_formula(f, vars, a)) models.push_back(a);
  return models;
}

inline std::vector<std::vector<bool>> cnf_models(const CnfFormula& cnf) {
  std::vector<std::vector<bool>> models;
  for (auto& a : all_assignments(cnf.num_vars))
    if (eval_cnf(cnf, a)) models.push_back(a);
  return models;
}

// QBF truth by straightforward recursion, written independently of eval_qbf.
inline bool qbf_truth_brute(const QbfFormula& q, std::size_t depth,
                            std::vector<bool>& value) {
  if (depth == q.prefix.size()) return eval_cnf(q.matrix, value);
  auto [quant, var] = q.prefix[depth];
  bool results[2];
  for (int bit = 0; bit < 2; ++bit) {
    value[static_cast<std::size_t>(var) - 1] = bit;
    results[bit] = qbf_truth_brute(q, depth + 1, value);
  }
  return quant == Quantifier::Forall ? (results[0] && results[1])
                                     : (results[0] || results[1]);
}

inline bool qbf_truth_brute(const QbfFormula& q) {
  std::vector<bool> value(static_cast<std::size_t>(q.matrix.num_vars), false);
  return qbf_truth_brute(q, 0, value);
}

// Exact Akari solution count over all lamp subsets of the board's empty
// cells. Only usable for small boards.
inline std::uint64_t akari_count_brute(const AkariBoard& b) {
  std::vector<Coord> empties;
  for (std::size_t i = 0; i < b.grid.cell_count(); ++i)
    if (b.kind[i] == AkariCellKind::Empty) empties.push_back(b.grid.coord_at(i));
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (1ull << empties.size()); ++m) {
    LampSet lamps;
    for (std::size_t j = 0; j < empties.size(); ++j)
      if ((m >> j) & 1) lamps.insert(empties[j]);
    if (verify_akari(b, lamps).ok) ++count;
  }
  return count;
}

// All accepting lamp sets, brute force.
inline std::vector<LampSet> akari_solutions_brute(const AkariBoard& b) {
  std::vector<Coord> empties;
  for (std::size_t i = 0; i < b.grid.cell_count(); ++i)
    if (b.kind[i] == AkariCellKind::Empty) empties.push_back(b.grid.coord_at(i));
  std::vector<LampSet> out;
  for (std::uint64_t m = 0; m < (1ull << empties.size()); ++m) {
    LampSet lamps;
    for (std::size_t j = 0; j < empties.size(); ++j)
      if ((m >> j) & 1) lamps.insert(empties[j]);
    if (verify_akari(b, lamps).ok) out.push_back(lamps);
  }
  return out;
}

}  // namespace gf::test
