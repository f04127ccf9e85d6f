#include "gadgetforge/qbf.hpp"

#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gf {

void QbfFormula::validate() const {
  std::set<int> seen;
  for (const auto& [q, v] : prefix) {
    (void)q;
    if (v <= 0 || v > matrix.num_vars)
      throw std::runtime_error("quantified variable out of range");
    if (!seen.insert(v).second)
      throw std::runtime_error("variable quantified twice: " + std::to_string(v));
  }
  matrix.validate();
  for (const auto& c : matrix.clauses)
    for (int lit : c)
      if (!seen.count(std::abs(lit)))
        throw std::runtime_error("matrix mentions unquantified variable");
}

QbfFormula parse_qdimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  QbfFormula q;
  bool header_seen = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  bool clauses_started = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, fmt;
      hs >> p >> fmt >> q.matrix.num_vars >> declared_clauses;
      if (fmt != "cnf" || hs.fail())
        throw std::runtime_error("bad QDIMACS header: " + line);
      header_seen = true;
      continue;
    }
    if (!header_seen) throw std::runtime_error("line before QDIMACS header");
    if (line[0] == 'a' || line[0] == 'e') {
      if (clauses_started)
        throw std::runtime_error("quantifier block after clauses (not prenex)");
      Quantifier quant = line[0] == 'a' ? Quantifier::Forall : Quantifier::Exists;
      std::istringstream ls(line);
      char tag;
      ls >> tag;
      int v;
      while (ls >> v && v != 0) q.prefix.emplace_back(quant, v);
      continue;
    }
    clauses_started = true;
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        q.matrix.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) throw std::runtime_error("unterminated clause");
  if (q.matrix.clauses.size() != declared_clauses)
    throw std::runtime_error("header clause count mismatch");
  q.validate();
  return q;
}

std::string print_qdimacs(const QbfFormula& q) {
  std::ostringstream out;
  out << "p cnf " << q.matrix.num_vars << ' ' << q.matrix.clauses.size() << '\n';
  // Adjacent same-quantifier variables share a line.
  std::size_t i = 0;
  while (i < q.prefix.size()) {
    Quantifier quant = q.prefix[i].first;
    out << (quant == Quantifier::Forall ? 'a' : 'e');
    while (i < q.prefix.size() && q.prefix[i].first == quant) {
      out << ' ' << q.prefix[i].second;
      ++i;
    }
    out << " 0\n";
  }
  for (const auto& c : q.matrix.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

bool eval_rec(const QbfFormula& q, std::size_t depth, std::vector<bool>& value) {
  if (depth == q.prefix.size()) return eval_cnf(q.matrix, value);
  auto [quant, var] = q.prefix[depth];
  std::size_t slot = static_cast<std::size_t>(var) - 1;
  value[slot] = false;
  bool lo = eval_rec(q, depth + 1, value);
  if (quant == Quantifier::Exists && lo) return true;
  if (quant == Quantifier::Forall && !lo) return false;
  value[slot] = true;
  return eval_rec(q, depth + 1, value);
}

}  // namespace

bool eval_qbf(const QbfFormula& q, int max_vars) {
  q.validate();
  if (static_cast<int>(q.prefix.size()) > max_vars)
    throw std::runtime_error("eval_qbf size guard exceeded");
  std::vector<bool> value(static_cast<std::size_t>(q.matrix.num_vars), false);
  return eval_rec(q, 0, value);
}

}  // namespace gf
