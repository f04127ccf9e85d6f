#include "doctest.h"

#include <algorithm>

#include "gadgetforge/cnf.hpp"
#include "gadgetforge/formula.hpp"
#include "gadgetforge/qbf.hpp"
#include "support/oracles.hpp"

using namespace gf;

TEST_CASE("parse single atom") {
  auto f = parse_formula("x");
  CHECK(f->op == FormulaOp::Var);
  CHECK(f->var == "x");
}

TEST_CASE("parse precedence and shape of (!x & y) | x") {
  auto f = parse_formula("(!x & y) | x");
  REQUIRE(f->op == FormulaOp::Or);
  REQUIRE(f->kids[0]->op == FormulaOp::And);
  CHECK(f->kids[0]->kids[0]->op == FormulaOp::Not);
  CHECK(f->kids[0]->kids[0]->kids[0]->var == "x");
  CHECK(f->kids[0]->kids[1]->var == "y");
  CHECK(f->kids[1]->var == "x");
}

TEST_CASE("imply is right-associative") {
  auto f = parse_formula("a -> b -> c");
  REQUIRE(f->op == FormulaOp::Imply);
  CHECK(f->kids[0]->var == "a");
  REQUIRE(f->kids[1]->op == FormulaOp::Imply);
  CHECK(f->kids[1]->kids[0]->var == "b");
  CHECK(f->kids[1]->kids[1]->var == "c");
}

TEST_CASE("parser errors carry offsets") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("x &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(x | y"), ParseError);
  CHECK_THROWS_AS(parse_formula("x y"), ParseError);
  try {
    parse_formula("x & ");
  } catch (const ParseError& e) {
    CHECK(e.offset >= 4);
  }
}

TEST_CASE("parser round-trips through the printer") {
  const char* samples[] = {
      "x",
      "!x",
      "x & y | z",
      "x | y & z",
      "a -> b -> c",
      "(a -> b) -> c",
      "x ^ y | z",
      "(x ^ y) & !(a | b_2)",
      "!(!x)",
      "(!x & y) | x",
      "p -> q & r ^ s | !t",
  };
  for (const char* s : samples) {
    auto f = parse_formula(s);
    auto g = parse_formula(print_formula(f));
    CHECK_MESSAGE(formula_equal(f, g), "round-trip failed for: ", s);
  }
}

namespace {

// Enumerates models of a CNF restricted to the first k variables.
std::set<std::vector<bool>> projected_models(const CnfFormula& cnf, int k) {
  std::set<std::vector<bool>> out;
  for (auto& m : gf::test::cnf_models(cnf))
    out.insert(std::vector<bool>(m.begin(), m.begin() + k));
  return out;
}

}  // namespace

TEST_CASE("tseytin: trivial variable") {
  auto r = to_cnf_tseytin(parse_formula("x"));
  CHECK(r.cnf.num_vars == 1);
  REQUIRE(r.cnf.clauses.size() == 1);
  CHECK(r.cnf.clauses[0] == std::vector<int>{1});
}

TEST_CASE("tseytin: and(x,y) has exactly one projected model") {
  auto r = to_cnf_tseytin(parse_formula("x & y"));
  auto proj = projected_models(r.cnf, 2);
  CHECK(proj.size() == 1);
  CHECK(proj.count({true, true}) == 1);
}

TEST_CASE("tseytin: appendix formula has three projected models") {
  auto f = parse_formula("(!x & y) | x");
  auto r = to_cnf_tseytin(f);
  auto proj = projected_models(r.cnf, 2);
  // x=T with either y, plus x=F y=T.
  CHECK(proj.size() == 3);
  CHECK(proj.count({true, false}) == 1);
  CHECK(proj.count({true, true}) == 1);
  CHECK(proj.count({false, true}) == 1);
}

TEST_CASE("tseytin equisatisfiability and projection, exhaustive corpus") {
  const char* corpus[] = {
      "a & !a",
      "a | !a",
      "(a -> b) & (b -> c) & a & !c",
      "(x ^ y) ^ (x ^ y)",
      "(a | b) & (!a | c) & (!b | !c)",
      "(p & q) -> (r | !s)",
      "a ^ b ^ c ^ d",
      "(a & b & c) | (!a & !b & !c)",
      "(a -> b -> c) ^ (c -> a)",
      "(u | v) & (w | z) & (!u | !w) & (!v | !z)",
  };
  for (const char* s : corpus) {
    auto f = parse_formula(s);
    auto vars = formula_vars(f);
    auto fm = gf::test::formula_models(f);
    auto r = to_cnf_tseytin(f);
    CHECK(r.cnf.max_clause_width() <= 3);
    auto proj = projected_models(r.cnf, static_cast<int>(vars.size()));
    // Equisatisfiable and model-projection-exact.
    CHECK_MESSAGE(proj.size() == fm.size(), "projection mismatch for: ", s);
    for (auto& m : fm) CHECK(proj.count(m) == 1);
  }
}

TEST_CASE("dimacs parse/print") {
  auto cnf = parse_dimacs("p cnf 1 1\n1 0\n");
  CHECK(cnf.num_vars == 1);
  REQUIRE(cnf.clauses.size() == 1);
  CHECK(cnf.clauses[0] == std::vector<int>{1});

  auto cnf2 = parse_dimacs("c comment\np cnf 2 2\n1 2 0\n-1 2 0\n");
  CHECK(cnf2.clauses.size() == 2);
  auto again = parse_dimacs(print_dimacs(cnf2));
  CHECK(again.clauses == cnf2.clauses);

  CHECK_THROWS(parse_dimacs("p cnf 1 1\n2 0\n"));      // literal out of range
  CHECK_THROWS(parse_dimacs("p cnf 2 3\n1 0\n-2 0\n"));  // count mismatch
}

TEST_CASE("to_3cnf splits wide clauses equisatisfiably") {
  CnfFormula wide;
  wide.num_vars = 5;
  wide.clauses = {{1, 2, 3, 4, 5}, {-1, -2, -3, -4}, {1, -5}};
  auto narrow = to_3cnf(wide);
  CHECK(narrow.max_clause_width() <= 3);
  auto wide_proj = projected_models(wide, 5);
  auto narrow_proj = projected_models(narrow, 5);
  CHECK(wide_proj == narrow_proj);
}

TEST_CASE("qdimacs parse and evaluation") {
  auto q = parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n-1 2 0\n1 -2 0\n");
  REQUIRE(q.prefix.size() == 2);
  CHECK(q.prefix[0].first == Quantifier::Forall);
  CHECK(q.prefix[1].first == Quantifier::Exists);
  // forall x exists y (x <-> y) is true.
  CHECK(eval_qbf(q) == true);
  CHECK(gf::test::qbf_truth_brute(q) == true);

  CHECK_THROWS(parse_qdimacs("p cnf 1 1\na 1 0\ne 1 0\n1 0\n"));  // quantified twice
}

TEST_CASE("eval_qbf basics") {
  auto t = parse_qdimacs("p cnf 1 1\ne 1 0\n1 0\n");
  CHECK(eval_qbf(t) == true);
  auto f = parse_qdimacs("p cnf 1 1\na 1 0\n1 0\n");
  CHECK(eval_qbf(f) == false);
}

TEST_CASE("eval_qbf on the offspring-fling appendix formula") {
  // forall x exists y forall z (!x | z) & (x | y) & (y | z), vars 1,2,3.
  auto q = parse_qdimacs(
      "p cnf 3 3\na 1 0\ne 2 0\na 3 0\n-1 3 0\n1 2 0\n2 3 0\n");
  bool expected = gf::test::qbf_truth_brute(q);
  CHECK(eval_qbf(q) == expected);
  // Frozen: x=true forces clause (!x|z) to need z for all z, so false.
  CHECK(expected == false);
}

TEST_CASE("eval_qbf with all-exists prefix agrees with satisfiability") {
  const char* corpus[] = {
      "(a | b) & (!a | c) & (!b | !c)",
      "a & !a",
      "(a ^ b) | (c & d)",
      "(a -> b) & (b -> a) & (a | b)",
  };
  for (const char* s : corpus) {
    auto f = parse_formula(s);
    auto r = to_cnf_tseytin(f);
    QbfFormula q;
    q.matrix = r.cnf;
    for (int v = 1; v <= r.cnf.num_vars; ++v)
      q.prefix.emplace_back(Quantifier::Exists, v);
    bool sat = !gf::test::cnf_models(r.cnf).empty();
    CHECK(eval_qbf(q, 24) == sat);
  }
}
