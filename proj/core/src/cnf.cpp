#include "gadgetforge/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gf {

int CnfFormula::max_clause_width() const {
  std::size_t w = 0;
  for (const auto& c : clauses) w = std::max(w, c.size());
  return static_cast<int>(w);
}

void CnfFormula::validate() const {
  for (const auto& c : clauses) {
    for (int lit : c) {
      if (lit == 0 || std::abs(lit) > num_vars)
        throw std::runtime_error("literal out of range: " + std::to_string(lit));
    }
  }
}

namespace {

struct TseytinCtx {
  TseytinResult out;
  std::map<std::string, int> var_ids;

  int fresh_aux(const FormulaPtr& sub) {
    int id = ++out.cnf.num_vars;
    out.aux_bindings[id] = print_formula(sub);
    return id;
  }

  // Returns a literal whose truth equals the subformula's.
  int encode(const FormulaPtr& f) {
    switch (f->op) {
      case FormulaOp::Var: {
        auto it = var_ids.find(f->var);
        if (it == var_ids.end()) throw std::runtime_error("unregistered var");
        return it->second;
      }
      case FormulaOp::Not:
        return -encode(f->kids[0]);
      default:
        break;
    }
    int a = encode(f->kids[0]);
    int b = encode(f->kids[1]);
    int g = fresh_aux(f);
    auto& cl = out.cnf.clauses;
    switch (f->op) {
      case FormulaOp::And:
        cl.push_back({-g, a});
        cl.push_back({-g, b});
        cl.push_back({g, -a, -b});
        break;
      case FormulaOp::Or:
        cl.push_back({g, -a});
        cl.push_back({g, -b});
        cl.push_back({-g, a, b});
        break;
      case FormulaOp::Xor:
        cl.push_back({-g, a, b});
        cl.push_back({-g, -a, -b});
        cl.push_back({g, -a, b});
        cl.push_back({g, a, -b});
        break;
      case FormulaOp::Imply:
        cl.push_back({g, a});
        cl.push_back({g, -b});
        cl.push_back({-g, -a, b});
        break;
      default:
        throw std::logic_error("unreachable");
    }
    return g;
  }
};

}  // namespace

TseytinResult to_cnf_tseytin(const FormulaPtr& f) {
  TseytinCtx ctx;
  ctx.out.input_vars = formula_vars(f);
  for (const auto& name : ctx.out.input_vars) {
    ctx.var_ids[name] = ++ctx.out.cnf.num_vars;
  }
  int root = ctx.encode(f);
  ctx.out.cnf.clauses.push_back({root});
  ctx.out.cnf.validate();
  return ctx.out;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula cnf;
  bool header_seen = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, fmt;
      hs >> p >> fmt >> cnf.num_vars >> declared_clauses;
      if (fmt != "cnf" || hs.fail())
        throw std::runtime_error("bad DIMACS header: " + line);
      header_seen = true;
      continue;
    }
    if (!header_seen) throw std::runtime_error("clause before DIMACS header");
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) throw std::runtime_error("unterminated clause");
  if (!header_seen) throw std::runtime_error("missing DIMACS header");
  if (cnf.clauses.size() != declared_clauses)
    throw std::runtime_error("header clause count mismatch");
  cnf.validate();
  return cnf;
}

std::string print_dimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula to_3cnf(const CnfFormula& cnf) {
  CnfFormula out;
  out.num_vars = cnf.num_vars;
  for (const auto& c : cnf.clauses) {
    if (c.size() <= 3) {
      out.clauses.push_back(c);
      continue;
    }
    // (l1 l2 ... lk) -> (l1 l2 s1)(−s1 l3 s2)...(−s_{k-3} l_{k-1} lk)
    int prev = 0;
    std::size_t i = 0;
    while (c.size() - i > 2) {
      int s = ++out.num_vars;
      if (prev == 0)
        out.clauses.push_back({c[i], c[i + 1], s});
      else
        out.clauses.push_back({-prev, c[i], s});
      i += (prev == 0) ? 2 : 1;
      prev = s;
    }
    out.clauses.push_back({-prev, c[i], c[i + 1]});
  }
  out.validate();
  return out;
}

bool eval_cnf(const CnfFormula& cnf, const std::vector<bool>& assignment) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) {
      bool v = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0) == v) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace gf
