#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gf {

// Propositional formula AST. Connectives: ! & | ^ ->, with precedence
// ! > & > | = ^ > -> and right-associative ->.
enum class FormulaOp { Var, Not, And, Or, Xor, Imply };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaOp op;
  std::string var;             // set when op == Var
  std::vector<FormulaPtr> kids;

  static FormulaPtr make_var(std::string name);
  static FormulaPtr make_not(FormulaPtr a);
  static FormulaPtr make_bin(FormulaOp op, FormulaPtr a, FormulaPtr b);
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t off)
      : std::runtime_error(std::move(msg)), offset(off) {}
};

// Parses the formula grammar. Throws ParseError with a byte offset on
// malformed input (including empty input).
FormulaPtr parse_formula(const std::string& text);

// Prints with minimal parentheses; parse(print(f)) is structurally equal
// to f.
std::string print_formula(const FormulaPtr& f);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Variable names in first-appearance order (depth-first, left to right).
std::vector<std::string> formula_vars(const FormulaPtr& f);

// Evaluates under an assignment given as (name, value) pairs resolved by
// position in `vars`.
bool eval_formula(const FormulaPtr& f, const std::vector<std::string>& vars,
                  const std::vector<bool>& values);

}  // namespace gf
