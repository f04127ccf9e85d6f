#include "gadgetforge/formula.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace gf {

FormulaPtr Formula::make_var(std::string name) {
  auto f = std::make_shared<Formula>();
  f->op = FormulaOp::Var;
  f->var = std::move(name);
  return f;
}

FormulaPtr Formula::make_not(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->op = FormulaOp::Not;
  f->kids = {std::move(a)};
  return f;
}

FormulaPtr Formula::make_bin(FormulaOp op, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->kids = {std::move(a), std::move(b)};
  return f;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos), pos);
  }

  // imply := or ('->' imply)?          (right-associative)
  FormulaPtr parse_imply() {
    FormulaPtr lhs = parse_or();
    skip_ws();
    if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '>') {
      pos += 2;
      FormulaPtr rhs = parse_imply();
      return Formula::make_bin(FormulaOp::Imply, lhs, rhs);
    }
    return lhs;
  }

  // or := and (('|' | '^') and)*       (| and ^ share a level, left-assoc)
  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    for (;;) {
      char c = peek();
      if (c == '|') {
        ++pos;
        lhs = Formula::make_bin(FormulaOp::Or, lhs, parse_and());
      } else if (c == '^') {
        ++pos;
        lhs = Formula::make_bin(FormulaOp::Xor, lhs, parse_and());
      } else {
        return lhs;
      }
    }
  }

  // and := unary ('&' unary)*
  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (peek() == '&') {
      ++pos;
      lhs = Formula::make_bin(FormulaOp::And, lhs, parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    char c = peek();
    if (c == '!') {
      ++pos;
      return Formula::make_not(parse_unary());
    }
    if (c == '(') {
      ++pos;
      FormulaPtr inner = parse_imply();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      ++pos;
      while (pos < s.size() &&
             (std::islower(static_cast<unsigned char>(s[pos])) ||
              std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return Formula::make_var(s.substr(start, pos - start));
    }
    fail("expected atom, '!' or '('");
  }
};

int precedence(FormulaOp op) {
  switch (op) {
    case FormulaOp::Imply: return 0;
    case FormulaOp::Or:
    case FormulaOp::Xor: return 1;
    case FormulaOp::And: return 2;
    case FormulaOp::Not: return 3;
    case FormulaOp::Var: return 4;
  }
  return 4;
}

void print_rec(const FormulaPtr& f, int parent_prec, bool right_side,
               std::ostringstream& out) {
  int prec = precedence(f->op);
  // A right operand of -> at the same level needs no parens (right-assoc);
  // everything else parenthesizes on equal precedence of distinct operators.
  bool need_parens = prec < parent_prec;
  if (prec == parent_prec && prec == 1) need_parens = true;  // mixed | ^ chains
  (void)right_side;
  if (need_parens) out << '(';
  switch (f->op) {
    case FormulaOp::Var:
      out << f->var;
      break;
    case FormulaOp::Not:
      out << '!';
      print_rec(f->kids[0], precedence(FormulaOp::Not), false, out);
      break;
    case FormulaOp::And:
      print_rec(f->kids[0], prec, false, out);
      out << " & ";
      print_rec(f->kids[1], prec + 1, true, out);
      break;
    case FormulaOp::Or:
      print_rec(f->kids[0], prec, false, out);
      out << " | ";
      print_rec(f->kids[1], prec + 1, true, out);
      break;
    case FormulaOp::Xor:
      print_rec(f->kids[0], prec, false, out);
      out << " ^ ";
      print_rec(f->kids[1], prec + 1, true, out);
      break;
    case FormulaOp::Imply:
      print_rec(f->kids[0], prec + 1, false, out);
      out << " -> ";
      print_rec(f->kids[1], prec, true, out);
      break;
  }
  if (need_parens) out << ')';
}

void collect_vars(const FormulaPtr& f, std::vector<std::string>& order,
                  std::map<std::string, bool>& seen) {
  if (f->op == FormulaOp::Var) {
    if (!seen.count(f->var)) {
      seen[f->var] = true;
      order.push_back(f->var);
    }
    return;
  }
  for (const auto& k : f->kids) collect_vars(k, order, seen);
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  if (p.eof()) throw ParseError("empty input", 0);
  FormulaPtr f = p.parse_imply();
  if (!p.eof()) p.fail("trailing input");
  return f;
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream out;
  print_rec(f, 0, false, out);
  return out.str();
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->op != b->op) return false;
  if (a->op == FormulaOp::Var) return a->var == b->var;
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!formula_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

std::vector<std::string> formula_vars(const FormulaPtr& f) {
  std::vector<std::string> order;
  std::map<std::string, bool> seen;
  collect_vars(f, order, seen);
  return order;
}

bool eval_formula(const FormulaPtr& f, const std::vector<std::string>& vars,
                  const std::vector<bool>& values) {
  switch (f->op) {
    case FormulaOp::Var: {
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == f->var) return values[i];
      throw std::runtime_error("unbound variable: " + f->var);
    }
    case FormulaOp::Not:
      return !eval_formula(f->kids[0], vars, values);
    case FormulaOp::And:
      return eval_formula(f->kids[0], vars, values) &&
             eval_formula(f->kids[1], vars, values);
    case FormulaOp::Or:
      return eval_formula(f->kids[0], vars, values) ||
             eval_formula(f->kids[1], vars, values);
    case FormulaOp::Xor:
      return eval_formula(f->kids[0], vars, values) !=
             eval_formula(f->kids[1], vars, values);
    case FormulaOp::Imply:
      return !eval_formula(f->kids[0], vars, values) ||
             eval_formula(f->kids[1], vars, values);
  }
  return false;
}

}  // namespace gf
